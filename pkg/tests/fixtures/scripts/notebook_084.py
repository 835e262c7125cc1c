import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
from sklearn.model_selection import train_test_split
from sklearn.metrics import accuracy_score, mean_squared_error
from sklearn.preprocessing import RobustScaler
from sklearn.preprocessing import StandardScaler
from sklearn.decomposition import PCA
from sklearn.ensemble import GradientBoostingClassifier

df = pd.read_csv('../input/creditrisk.csv')
print(df['utilization'].describe().round(3))
print(df.groupby('debt').mean(numeric_only=True).round(2).head())
print(df.rank().corr().round(2).head())
print(df['history'].value_counts(normalize=True).head(15).round(3))
print(df.rank().corr().round(2).head())
plt.hist(df['history'].dropna().clip(lower=0).values, bins=30)
print(df.dtypes.value_counts().sort_index())
plt.title('distribution of debt')
df['history'].dropna().hist(bins=25)
df.sort_values('debt').head(20).plot.bar(y='income')
plt.figure(figsize=(10, 6))
print(df.groupby('utilization').mean(numeric_only=True).round(2).head())
sns.countplot(x=df['history'].fillna('missing').astype(str))
df.plot.scatter(x='utilization', y='history')
plt.show()
print(df['income'].describe().round(3))
print(df['income'].value_counts(normalize=True).head(15).round(3))
print(df.rank().corr().round(2).head())
print(df['income'].value_counts(normalize=True).head(15).round(3))
df.sort_values('history').head(20).plot.bar(y='debt')
plt.show()
plt.hist(df['debt'].dropna().clip(lower=0).values, bins=30)
df = df.rename(columns=str.lower)
df = df.drop_duplicates()
df['debt_log'] = np.log1p(df['debt'].clip(lower=0))
df = df.reset_index(drop=True)
plt.title('distribution of debt')
print(df.memory_usage(deep=True).sum().item())
print(df['income'].describe().round(3))
df.boxplot(column='debt')
print(df.duplicated().sum().item())
print(df.groupby('income').mean(numeric_only=True).round(2).head())
print(df.nunique().sort_values(ascending=False).head(10))
print(df.dtypes.value_counts().sort_index())
sns.pairplot(df.sample(200).reset_index(drop=True))
sns.heatmap(df.corr().abs().round(2), annot=False, cmap='viridis')
print(df.info())
y = df['income']
X = df.drop('income', axis=1)
prep0 = RobustScaler()
Xt = prep0.fit_transform(X)
prep1 = StandardScaler()
Xtt = prep1.fit_transform(Xt)
prep2 = PCA()
Xttt = prep2.fit_transform(Xtt)
X_train, X_test, y_train, y_test = train_test_split(Xttt, y, test_size=0.2)
model0 = GradientBoostingClassifier()
model0.fit(X_train, y_train)
pred0 = model0.predict(X_test)
print(accuracy_score(y_test, pred0))
plt.plot(pred0)
plt.show()
df.sort_values('utilization').head(20).plot.bar(y='utilization')
print(df['utilization'].astype(str).str.len().describe().round(1))
print(df.tail(8).T.round(3))
