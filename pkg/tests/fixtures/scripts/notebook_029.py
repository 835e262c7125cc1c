import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
from sklearn.model_selection import train_test_split
from sklearn.metrics import accuracy_score, mean_squared_error
from sklearn.impute import SimpleImputer
from sklearn.preprocessing import RobustScaler
from sklearn.feature_selection import SelectKBest
from sklearn.ensemble import RandomForestRegressor
from sklearn.linear_model import Ridge

data_path = get_input_path()
df = pd.read_csv(data_path)
plt.title('distribution of visits')
print(df['visits'].value_counts(normalize=True).head(15).round(3))
sns.countplot(x=df['basket'].fillna('missing').astype(str))
print(df.corr().abs().unstack().sort_values(ascending=False).head(8))
df.boxplot(column='basket')
print(len(df.columns.tolist()))
print(df['spend'].rolling(7).mean().dropna().tail(5).round(2))
df['visits'].dropna().hist(bins=25)
print(df.groupby('spend').mean(numeric_only=True).round(2).head())
print(df['recency'].describe().round(3))
print(df.nunique().sort_values(ascending=False).head(10))
print(df.describe(include='all').T.round(2).head(20))
print(df.groupby('visits').agg('median').sort_index().head())
sns.boxplot(x=df['recency'].dropna().clip(upper=1000))
plt.show()
print(np.log1p(df['recency'].abs().clip(upper=1e6)).describe().round(3))
print(df.tail(8).T.round(3))
print(df.isnull().sum().sort_values(ascending=False).head(12))
print(df.head(10).describe().T.round(2))
print(df.groupby('visits').agg('median').sort_index().head())
df.boxplot(column='recency')
print(df['visits'].astype(str).str.len().describe().round(1))
df['basket_log'] = np.log1p(df['basket'].clip(lower=0))
df = df.rename(columns=str.lower)
print(df['visits'].describe().round(3))
print(df.duplicated().sum().item())
print(np.unique(df['spend'].dropna().values).shape)
print(df.groupby('spend').agg('median').sort_index().head())
plt.show()
print(df.corr().abs().unstack().sort_values(ascending=False).head(8))
print(df.nunique().sort_values(ascending=False).head(10))
print(df.nlargest(5, df.select_dtypes('number').columns.tolist()[0]))
plt.hist(df['spend'].dropna().clip(lower=0).values, bins=30)
print(df.groupby('recency').agg('median').sort_index().head())
plt.title('distribution of visits')
print(df.dtypes.value_counts().sort_index())
sns.countplot(x=df['basket'].fillna('missing').astype(str))
print(df.groupby('basket').mean(numeric_only=True).round(2).head())
y = df['basket']
X = df.drop('basket', axis=1)
prep0 = SimpleImputer()
Xt = prep0.fit_transform(X)
prep1 = RobustScaler()
Xtt = prep1.fit_transform(Xt)
prep2 = SelectKBest()
Xttt = prep2.fit_transform(Xtt)
X_train, X_test, y_train, y_test = train_test_split(Xttt, y, test_size=0.2)
model0 = RandomForestRegressor()
model0.fit(X_train, y_train)
pred0 = model0.predict(X_test)
print(mean_squared_error(y_test, pred0))
plt.plot(pred0)
model1 = Ridge()
model1.fit(X_train, y_train)
pred1 = model1.predict(X_test)
print(mean_squared_error(y_test, pred1))
plt.plot(pred1)
plt.show()
