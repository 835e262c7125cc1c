import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
from sklearn.model_selection import train_test_split
from sklearn.metrics import accuracy_score, mean_squared_error
from sklearn.decomposition import PCA
from sklearn.preprocessing import MinMaxScaler
from sklearn.neighbors import KNeighborsClassifier

df = pd.read_csv('../input/creditrisk.csv')
print(df.groupby('utilization').agg('median').sort_index().head())
print(df.rank().corr().round(2).head())
sns.heatmap(df.corr().abs().round(2), annot=False, cmap='viridis')
sns.countplot(x=df['history'].fillna('missing').astype(str))
print(df['history'].isna().mean().round(4).item())
print(df['income'].astype(str).str.len().describe().round(1))
df['income'].dropna().hist(bins=25)
df.boxplot(column='debt')
print(df.sample(5).T.round(2))
print(df['history'].value_counts(normalize=True).head(15).round(3))
plt.hist(df['debt'].dropna().clip(lower=0).values, bins=30)
print(np.log1p(df['income'].abs().clip(upper=1e6)).describe().round(3))
print(df['debt'].dropna().skew().round(3))
print(df.duplicated().sum().item())
df.plot.scatter(x='debt', y='utilization')
print(df['income'].describe().round(3))
df['income'] = df['income'].fillna(df['income'].mode().iat[0])
df['history'] = df['history'].astype('float64')
df = df.drop_duplicates()
df = df.dropna(axis=0, thresh=3)
df['history'].dropna().hist(bins=25)
print(df.info())
plt.figure(figsize=(10, 6))
print(np.log1p(df['debt'].abs().clip(upper=1e6)).describe().round(3))
plt.show()
print(len(df.columns.tolist()))
print(df.sample(12).sort_index().head())
print(np.log1p(df['debt'].abs().clip(upper=1e6)).describe().round(3))
print(df.corr().abs().unstack().sort_values(ascending=False).head(8))
print(df.sample(5).T.round(2))
print(np.unique(df['debt'].dropna().values).shape)
y = df['income']
X = df.drop('income', axis=1)
prep0 = PCA()
Xt = prep0.fit_transform(X)
prep1 = MinMaxScaler()
Xtt = prep1.fit_transform(Xt)
X_train, X_test, y_train, y_test = train_test_split(Xtt, y, test_size=0.2)
model0 = KNeighborsClassifier()
model0.fit(X_train, y_train)
pred0 = model0.predict(X_test)
print(accuracy_score(y_test, pred0))
plt.plot(pred0)
plt.show()
print(df.groupby('utilization').agg('median').sort_index().head())
print(df['utilization'].isna().mean().round(4).item())
print(df['debt'].isna().mean().round(4).item())
print(df.nlargest(5, df.select_dtypes('number').columns.tolist()[0]))
print(df.sample(12).sort_index().head())
print(df['income'].isna().mean().round(4).item())
df.sort_values('utilization').head(20).plot.bar(y='debt')
print(df.sample(12).sort_index().head())
df['utilization'].dropna().hist(bins=25)
print(df.sample(5).T.round(2))
print(df.groupby('debt').size().sort_values(ascending=False).head(6))
print(np.unique(df['income'].dropna().values).shape)
