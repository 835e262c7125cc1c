import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
from sklearn.model_selection import train_test_split
from sklearn.metrics import accuracy_score, mean_squared_error
from sklearn.impute import SimpleImputer
from sklearn.feature_selection import SelectKBest
from xgboost import XGBClassifier

df = pd.read_csv('../input/wineq.csv')
print(df.memory_usage(deep=True).sum().item())
print(df['acidity'].rolling(7).mean().dropna().tail(5).round(2))
print(df.head(10).describe().T.round(2))
print(np.unique(df['alcohol'].dropna().values).shape)
print(df.groupby('acidity').mean(numeric_only=True).round(2).head())
print(df.nlargest(5, df.select_dtypes('number').columns.tolist()[0]))
print(df['acidity'].value_counts(normalize=True).head(15).round(3))
print(df.nlargest(5, df.select_dtypes('number').columns.tolist()[0]))
print(df.describe(include='all').T.round(2).head(20))
print(df['acidity'].value_counts(normalize=True).head(15).round(3))
plt.figure(figsize=(10, 6))
df['acidity'].dropna().hist(bins=25)
print(df.groupby('density').mean(numeric_only=True).round(2).head())
print(df['sulphates'].value_counts(normalize=True).head(15).round(3))
print(df.duplicated().sum().item())
df['acidity'].dropna().hist(bins=25)
df['density'].dropna().hist(bins=25)
print(df.info())
print(df['sulphates'].describe().round(3))
print(df['density'].dropna().kurt().round(3))
df = df.reset_index(drop=True)
df = df.drop_duplicates()
print(df['density'].dropna().kurt().round(3))
df['density'].dropna().hist(bins=25)
plt.tight_layout()
print(df['sulphates'].rolling(7).mean().dropna().tail(5).round(2))
print(df.dtypes.value_counts().sort_index())
df['density'].dropna().hist(bins=25)
print(df.nlargest(5, df.select_dtypes('number').columns.tolist()[0]))
plt.show()
print(df.tail(8).T.round(3))
print(df.corr().abs().unstack().sort_values(ascending=False).head(8))
sns.boxplot(x=df['sulphates'].dropna().clip(upper=1000))
print(df.duplicated().sum().item())
print(df.nunique().sort_values(ascending=False).head(10))
print(df.groupby('alcohol').mean(numeric_only=True).round(2).head())
print(df.dtypes.value_counts().sort_index())
y = df['acidity']
X = df.drop('acidity', axis=1)
prep0 = SimpleImputer()
Xt = prep0.fit_transform(X)
prep1 = SelectKBest()
Xtt = prep1.fit_transform(Xt)
X_train, X_test, y_train, y_test = train_test_split(Xtt, y, test_size=0.2)
model0 = XGBClassifier()
model0.fit(X_train, y_train)
pred0 = model0.predict(X_test)
print(accuracy_score(y_test, pred0))
plt.plot(pred0)
plt.show()
print(df['acidity'].dropna().kurt().round(3))
print(df.sample(12).sort_index().head())
print(len(df.columns.tolist()))
print(df['density'].value_counts(normalize=True).head(15).round(3))
df.boxplot(column='sulphates')
print(df['alcohol'].dropna().kurt().round(3))
