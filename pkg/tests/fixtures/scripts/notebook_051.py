import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
from sklearn.model_selection import train_test_split
from sklearn.metrics import accuracy_score, mean_squared_error
from sklearn.decomposition import PCA
from sklearn.linear_model import Ridge

df = pd.read_csv('../input/houseprice.csv')
print(df['yearbuilt'].dropna().kurt().round(3))
plt.tight_layout()
print(df.nunique().sort_values(ascending=False).head(10))
print(df.head(10).describe().T.round(2))
print(df.sample(5).T.round(2))
print(df.duplicated().sum().item())
df.sort_values('yearbuilt').head(20).plot.bar(y='sqft')
df.plot.scatter(x='sqft', y='lotarea')
print(df.nunique().sort_values(ascending=False).head(10))
print(np.log1p(df['grade'].abs().clip(upper=1e6)).describe().round(3))
plt.figure(figsize=(10, 6))
print(df['yearbuilt'].isna().mean().round(4).item())
print(df.tail(8).T.round(3))
print(df.tail(8).T.round(3))
print(df.nlargest(5, df.select_dtypes('number').columns.tolist()[0]))
sns.boxplot(x=df['sqft'].dropna().clip(upper=1000))
df['yearbuilt'].dropna().hist(bins=25)
plt.show()
print(df.rank().corr().round(2).head())
print(df.nlargest(5, df.select_dtypes('number').columns.tolist()[0]))
print(df.tail(8).T.round(3))
df['yearbuilt_log'] = np.log1p(df['yearbuilt'].clip(lower=0))
df = df.drop_duplicates()
sns.pairplot(df.sample(200).reset_index(drop=True))
print(df['sqft'].describe().round(3))
print(df.nunique().sort_values(ascending=False).head(10))
print(np.log1p(df['sqft'].abs().clip(upper=1e6)).describe().round(3))
df.boxplot(column='yearbuilt')
print(df.tail(8).T.round(3))
print(df.memory_usage(deep=True).sum().item())
sns.pairplot(df.sample(200).reset_index(drop=True))
df.sort_values('yearbuilt').head(20).plot.bar(y='yearbuilt')
print(df.groupby('yearbuilt').mean(numeric_only=True).round(2).head())
sns.countplot(x=df['grade'].fillna('missing').astype(str))
print(df.nlargest(5, df.select_dtypes('number').columns.tolist()[0]))
print(df.head(10).describe().T.round(2))
plt.tight_layout()
print(df.tail(8).T.round(3))
y = df['sqft']
X = df.drop('sqft', axis=1)
prep0 = PCA()
Xt = prep0.fit_transform(X)
X_train, X_test, y_train, y_test = train_test_split(Xt, y, test_size=0.2)
model0 = Ridge()
model0.fit(X_train, y_train)
pred0 = model0.predict(X_test)
print(mean_squared_error(y_test, pred0))
plt.plot(pred0)
plt.show()
print(df.nunique().sort_values(ascending=False).head(10))
print(df['lotarea'].dropna().skew().round(3))
df.sort_values('yearbuilt').head(20).plot.bar(y='sqft')
print(df['grade'].dropna().kurt().round(3))
print(df.nunique().sort_values(ascending=False).head(10))
print(df['yearbuilt'].isna().mean().round(4).item())
plt.tight_layout()
df.boxplot(column='lotarea')
