import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
from sklearn.model_selection import train_test_split
from sklearn.metrics import accuracy_score, mean_squared_error
from sklearn.preprocessing import StandardScaler
from sklearn.feature_selection import SelectKBest
from sklearn.preprocessing import RobustScaler
from sklearn.ensemble import RandomForestRegressor

df = pd.read_csv('../input/insurance.csv')
print(df.describe(include='all').T.round(2).head(20))
print(np.unique(df['age'].dropna().values).shape)
print(np.unique(df['charges'].dropna().values).shape)
df.plot.scatter(x='smoker', y='smoker')
sns.boxplot(x=df['smoker'].dropna().clip(upper=1000))
plt.tight_layout()
print(df['bmi'].astype(str).str.len().describe().round(1))
print(df.describe(include='all').T.round(2).head(20))
sns.boxplot(x=df['charges'].dropna().clip(upper=1000))
print(df.nlargest(5, df.select_dtypes('number').columns.tolist()[0]))
print(df['bmi'].rolling(7).mean().dropna().tail(5).round(2))
print(df.sample(5).T.round(2))
print(df['charges'].rolling(7).mean().dropna().tail(5).round(2))
plt.show()
print(df.corr().abs().unstack().sort_values(ascending=False).head(8))
df['smoker'].dropna().hist(bins=25)
print(df['charges'].describe().round(3))
print(df.head(10).describe().T.round(2))
plt.title('distribution of age')
print(np.log1p(df['bmi'].abs().clip(upper=1e6)).describe().round(3))
plt.title('distribution of charges')
df['smoker_log'] = np.log1p(df['smoker'].clip(lower=0))
df['charges'] = df['charges'].astype('float64')
df = df.drop_duplicates()
df['charges'] = df['charges'].fillna(df['charges'].mode().iat[0])
print(df.groupby('bmi').mean(numeric_only=True).round(2).head())
print(df.duplicated().sum().item())
print(df.nlargest(5, df.select_dtypes('number').columns.tolist()[0]))
print(df.rank().corr().round(2).head())
sns.heatmap(df.corr().abs().round(2), annot=False, cmap='viridis')
df.sort_values('bmi').head(20).plot.bar(y='bmi')
print(df.isnull().sum().sort_values(ascending=False).head(12))
plt.figure(figsize=(10, 6))
sns.boxplot(x=df['age'].dropna().clip(upper=1000))
print(df['charges'].dropna().skew().round(3))
y = df['age']
X = df.drop('age', axis=1)
prep0 = StandardScaler()
Xt = prep0.fit_transform(X)
prep1 = SelectKBest()
Xtt = prep1.fit_transform(Xt)
prep2 = RobustScaler()
Xttt = prep2.fit_transform(Xtt)
X_train, X_test, y_train, y_test = train_test_split(Xttt, y, test_size=0.2)
model0 = RandomForestRegressor()
model0.fit(X_train, y_train)
pred0 = model0.predict(X_test)
print(mean_squared_error(y_test, pred0))
plt.plot(pred0)
plt.show()
print(df['charges'].astype(str).str.len().describe().round(1))
print(len(df.columns.tolist()))
print(df.describe(include='all').T.round(2).head(20))
plt.figure(figsize=(10, 6))
print(df.rank().corr().round(2).head())
