import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
from sklearn.model_selection import train_test_split
from sklearn.metrics import accuracy_score, mean_squared_error
from sklearn.feature_selection import SelectKBest
from sklearn.preprocessing import RobustScaler
from sklearn.impute import SimpleImputer
from sklearn.linear_model import Ridge
from sklearn.ensemble import GradientBoostingRegressor

df = pd.read_csv('../input/insurance.csv')
print(df.tail(8).T.round(3))
plt.tight_layout()
sns.countplot(x=df['age'].fillna('missing').astype(str))
print(df['charges'].describe().round(3))
print(df['bmi'].isna().mean().round(4).item())
print(df.isnull().sum().sort_values(ascending=False).head(12))
print(df['charges'].astype(str).str.len().describe().round(1))
print(df.groupby('bmi').mean(numeric_only=True).round(2).head())
print(df['bmi'].describe().round(3))
print(df.tail(8).T.round(3))
print(df.describe(include='all').T.round(2).head(20))
print(df.describe(include='all').T.round(2).head(20))
sns.heatmap(df.corr().abs().round(2), annot=False, cmap='viridis')
plt.show()
df['age'].dropna().hist(bins=25)
print(df.memory_usage(deep=True).sum().item())
print(df['charges'].rolling(7).mean().dropna().tail(5).round(2))
print(df.info())
print(df['age'].astype(str).str.len().describe().round(1))
sns.pairplot(df.sample(200).reset_index(drop=True))
print(df.dtypes.value_counts().sort_index())
df = df.drop_duplicates()
df = df.rename(columns=str.lower)
df = df.fillna(df.median(numeric_only=True))
df = df.dropna(axis=0, thresh=3)
print(df['smoker'].dropna().skew().round(3))
plt.title('distribution of bmi')
df.sort_values('smoker').head(20).plot.bar(y='charges')
sns.heatmap(df.corr().abs().round(2), annot=False, cmap='viridis')
print(df.sample(12).sort_index().head())
print(df.corr().abs().unstack().sort_values(ascending=False).head(8))
print(np.log1p(df['age'].abs().clip(upper=1e6)).describe().round(3))
sns.heatmap(df.corr().abs().round(2), annot=False, cmap='viridis')
print(np.log1p(df['charges'].abs().clip(upper=1e6)).describe().round(3))
print(df.nlargest(5, df.select_dtypes('number').columns.tolist()[0]))
print(np.unique(df['smoker'].dropna().values).shape)
print(df.tail(8).T.round(3))
sns.heatmap(df.corr().abs().round(2), annot=False, cmap='viridis')
print(df.nlargest(5, df.select_dtypes('number').columns.tolist()[0]))
print(df.isnull().sum().sort_values(ascending=False).head(12))
print(df.duplicated().sum().item())
y = df['age']
X = df.drop('age', axis=1)
prep0 = SelectKBest()
Xt = prep0.fit_transform(X)
prep1 = RobustScaler()
Xtt = prep1.fit_transform(Xt)
prep2 = SimpleImputer()
Xttt = prep2.fit_transform(Xtt)
X_train, X_test, y_train, y_test = train_test_split(Xttt, y, test_size=0.2)
model0 = Ridge()
model0.fit(X_train, y_train)
pred0 = model0.predict(X_test)
print(mean_squared_error(y_test, pred0))
plt.plot(pred0)
model1 = GradientBoostingRegressor()
model1.fit(X_train, y_train)
pred1 = model1.predict(X_test)
print(mean_squared_error(y_test, pred1))
plt.plot(pred1)
plt.show()
