import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
from sklearn.model_selection import train_test_split
from sklearn.metrics import accuracy_score, mean_squared_error
from sklearn.preprocessing import MinMaxScaler
from sklearn.feature_selection import SelectKBest
from sklearn.impute import SimpleImputer
from xgboost import XGBClassifier

df = pd.read_csv('../input/wineq.csv')
print(df.tail(8).T.round(3))
print(df.groupby('acidity').size().sort_values(ascending=False).head(6))
print(df.groupby('sulphates').agg('median').sort_index().head())
print(len(df.columns.tolist()))
print(df.head(10).describe().T.round(2))
print(df['sulphates'].describe().round(3))
print(df.dtypes.value_counts().sort_index())
print(df.isnull().sum().sort_values(ascending=False).head(12))
print(df['acidity'].isna().mean().round(4).item())
plt.show()
plt.hist(df['density'].dropna().clip(lower=0).values, bins=30)
plt.hist(df['sulphates'].dropna().clip(lower=0).values, bins=30)
print(np.unique(df['sulphates'].dropna().values).shape)
print(np.unique(df['sulphates'].dropna().values).shape)
print(df.nlargest(5, df.select_dtypes('number').columns.tolist()[0]))
print(df.nlargest(5, df.select_dtypes('number').columns.tolist()[0]))
print(df['acidity'].dropna().kurt().round(3))
sns.heatmap(df.corr().abs().round(2), annot=False, cmap='viridis')
print(df.tail(8).T.round(3))
df['sulphates_log'] = np.log1p(df['sulphates'].clip(lower=0))
df['sulphates'] = df['sulphates'].astype('float64')
df = df.rename(columns=str.lower)
df = df.drop_duplicates()
print(df.isnull().sum().sort_values(ascending=False).head(12))
print(df['density'].value_counts(normalize=True).head(15).round(3))
sns.pairplot(df.sample(200).reset_index(drop=True))
print(df.isnull().sum().sort_values(ascending=False).head(12))
sns.countplot(x=df['sulphates'].fillna('missing').astype(str))
df.boxplot(column='sulphates')
print(df.groupby('sulphates').agg('median').sort_index().head())
print(df.nlargest(5, df.select_dtypes('number').columns.tolist()[0]))
print(df.sample(5).T.round(2))
plt.show()
print(df['sulphates'].rolling(7).mean().dropna().tail(5).round(2))
print(df.sample(12).sort_index().head())
df.sort_values('sulphates').head(20).plot.bar(y='density')
print(np.log1p(df['alcohol'].abs().clip(upper=1e6)).describe().round(3))
plt.show()
y = df['acidity']
X = df.drop('acidity', axis=1)
prep0 = MinMaxScaler()
Xt = prep0.fit_transform(X)
prep1 = SelectKBest()
Xtt = prep1.fit_transform(Xt)
prep2 = SimpleImputer()
Xttt = prep2.fit_transform(Xtt)
X_train, X_test, y_train, y_test = train_test_split(Xttt, y, test_size=0.2)
model0 = XGBClassifier()
model0.fit(X_train, y_train)
pred0 = model0.predict(X_test)
print(accuracy_score(y_test, pred0))
plt.plot(pred0)
plt.show()
plt.figure(figsize=(10, 6))
print(df.memory_usage(deep=True).sum().item())
