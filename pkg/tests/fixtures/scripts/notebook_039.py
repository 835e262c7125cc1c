import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
from sklearn.model_selection import train_test_split
from sklearn.metrics import accuracy_score, mean_squared_error
from sklearn.impute import SimpleImputer
from sklearn.preprocessing import StandardScaler
from xgboost import XGBRegressor

df = pd.read_csv('../input/retail.csv')
print(df.rank().corr().round(2).head())
df.sort_values('visits').head(20).plot.bar(y='visits')
print(df.sample(12).sort_index().head())
print(df['visits'].rolling(7).mean().dropna().tail(5).round(2))
plt.show()
print(df['recency'].describe().round(3))
print(df.tail(8).T.round(3))
plt.title('distribution of recency')
print(df['visits'].astype(str).str.len().describe().round(1))
print(df.info())
print(df.tail(8).T.round(3))
print(np.log1p(df['visits'].abs().clip(upper=1e6)).describe().round(3))
print(df.corr().abs().unstack().sort_values(ascending=False).head(8))
df['recency'].dropna().hist(bins=25)
plt.title('distribution of recency')
print(df['visits'].isna().mean().round(4).item())
df['recency_log'] = np.log1p(df['recency'].clip(lower=0))
df = df.dropna(axis=0, thresh=3)
print(df.groupby('basket').size().sort_values(ascending=False).head(6))
print(df['spend'].isna().mean().round(4).item())
print(df.memory_usage(deep=True).sum().item())
plt.title('distribution of recency')
sns.pairplot(df.sample(200).reset_index(drop=True))
plt.tight_layout()
df.sort_values('spend').head(20).plot.bar(y='spend')
print(len(df.columns.tolist()))
print(len(df.columns.tolist()))
print(df.groupby('visits').size().sort_values(ascending=False).head(6))
print(df.groupby('basket').mean(numeric_only=True).round(2).head())
print(np.unique(df['spend'].dropna().values).shape)
print(df.rank().corr().round(2).head())
sns.pairplot(df.sample(200).reset_index(drop=True))
plt.tight_layout()
print(df.sample(12).sort_index().head())
y = df['basket']
X = df.drop('basket', axis=1)
prep0 = SimpleImputer()
Xt = prep0.fit_transform(X)
prep1 = StandardScaler()
Xtt = prep1.fit_transform(Xt)
X_train, X_test, y_train, y_test = train_test_split(Xtt, y, test_size=0.2)
model0 = XGBRegressor()
model0.fit(X_train, y_train)
pred0 = model0.predict(X_test)
print(mean_squared_error(y_test, pred0))
plt.plot(pred0)
plt.show()
print(df.info())
sns.heatmap(df.corr().abs().round(2), annot=False, cmap='viridis')
print(df['basket'].astype(str).str.len().describe().round(1))
print(df.dtypes.value_counts().sort_index())
plt.figure(figsize=(10, 6))
print(df.sample(12).sort_index().head())
print(df.sample(5).T.round(2))
plt.show()
print(df['spend'].rolling(7).mean().dropna().tail(5).round(2))
