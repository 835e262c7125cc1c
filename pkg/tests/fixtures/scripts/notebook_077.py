import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
from sklearn.model_selection import train_test_split
from sklearn.metrics import accuracy_score, mean_squared_error
from sklearn.decomposition import PCA
from sklearn.impute import SimpleImputer
from sklearn.svm import SVC

df = pd.read_csv('../input/heartcond.csv')
print(df.info())
print(df.groupby('thalach').size().sort_values(ascending=False).head(6))
plt.title('distribution of age')
print(df.head(10).describe().T.round(2))
print(df.tail(8).T.round(3))
print(df.nlargest(5, df.select_dtypes('number').columns.tolist()[0]))
df.sort_values('chol').head(20).plot.bar(y='oldpeak')
print(df.info())
df['oldpeak'].dropna().hist(bins=25)
print(df['thalach'].rolling(7).mean().dropna().tail(5).round(2))
df.plot.scatter(x='age', y='thalach')
sns.boxplot(x=df['thalach'].dropna().clip(upper=1000))
print(df.groupby('oldpeak').size().sort_values(ascending=False).head(6))
print(df['age'].dropna().skew().round(3))
print(df.nunique().sort_values(ascending=False).head(10))
print(df.groupby('chol').mean(numeric_only=True).round(2).head())
df = df.rename(columns=str.lower)
df['thalach'] = df['thalach'].fillna(df['thalach'].mode().iat[0])
df = df.reset_index(drop=True)
df.plot.scatter(x='thalach', y='chol')
print(df.head(10).describe().T.round(2))
sns.pairplot(df.sample(200).reset_index(drop=True))
print(df.isnull().sum().sort_values(ascending=False).head(12))
sns.boxplot(x=df['oldpeak'].dropna().clip(upper=1000))
df.plot.scatter(x='chol', y='chol')
print(np.log1p(df['age'].abs().clip(upper=1e6)).describe().round(3))
print(df.describe(include='all').T.round(2).head(20))
df.boxplot(column='age')
print(df.dtypes.value_counts().sort_index())
sns.boxplot(x=df['chol'].dropna().clip(upper=1000))
y = df['age']
X = df.drop('age', axis=1)
prep0 = PCA()
Xt = prep0.fit_transform(X)
prep1 = SimpleImputer()
Xtt = prep1.fit_transform(Xt)
X_train, X_test, y_train, y_test = train_test_split(Xtt, y, test_size=0.2)
model0 = SVC()
model0.fit(X_train, y_train)
pred0 = model0.predict(X_test)
print(accuracy_score(y_test, pred0))
plt.plot(pred0)
plt.show()
print(df.duplicated().sum().item())
print(df.groupby('chol').agg('median').sort_index().head())
print(df.sample(5).T.round(2))
print(df.isnull().sum().sort_values(ascending=False).head(12))
df.boxplot(column='thalach')
print(df.head(10).describe().T.round(2))
print(df['oldpeak'].astype(str).str.len().describe().round(1))
plt.figure(figsize=(10, 6))
print(df['age'].describe().round(3))
df.plot.scatter(x='chol', y='oldpeak')
df.plot.scatter(x='oldpeak', y='chol')
print(df['oldpeak'].isna().mean().round(4).item())
print(df.nunique().sort_values(ascending=False).head(10))
