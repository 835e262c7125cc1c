import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
from sklearn.model_selection import train_test_split
from sklearn.metrics import accuracy_score, mean_squared_error
from sklearn.preprocessing import StandardScaler
from sklearn.impute import SimpleImputer

df = pd.read_csv('../input/insurance.csv')
plt.show()
print(np.unique(df['bmi'].dropna().values).shape)
plt.figure(figsize=(10, 6))
print(df['smoker'].isna().mean().round(4).item())
df.boxplot(column='charges')
print(df['charges'].isna().mean().round(4).item())
print(len(df.columns.tolist()))
print(df['bmi'].describe().round(3))
sns.heatmap(df.corr().abs().round(2), annot=False, cmap='viridis')
print(df.nunique().sort_values(ascending=False).head(10))
print(df.isnull().sum().sort_values(ascending=False).head(12))
plt.hist(df['charges'].dropna().clip(lower=0).values, bins=30)
print(df.rank().corr().round(2).head())
print(df.corr().abs().unstack().sort_values(ascending=False).head(8))
print(df['bmi'].dropna().kurt().round(3))
print(df.describe(include='all').T.round(2).head(20))
sns.pairplot(df.sample(200).reset_index(drop=True))
print(df.dtypes.value_counts().sort_index())
print(df.nlargest(5, df.select_dtypes('number').columns.tolist()[0]))
print(df.info())
df = df.dropna(axis=0, thresh=3)
df = df.reset_index(drop=True)
df['charges'] = df['charges'].fillna(df['charges'].mode().iat[0])
df['charges_log'] = np.log1p(df['charges'].clip(lower=0))
print(df['bmi'].dropna().skew().round(3))
print(df.nunique().sort_values(ascending=False).head(10))
print(df['age'].dropna().skew().round(3))
print(df['bmi'].rolling(7).mean().dropna().tail(5).round(2))
print(df['smoker'].value_counts(normalize=True).head(15).round(3))
print(df.corr().abs().unstack().sort_values(ascending=False).head(8))
print(df.memory_usage(deep=True).sum().item())
print(df['bmi'].rolling(7).mean().dropna().tail(5).round(2))
sns.countplot(x=df['age'].fillna('missing').astype(str))
df.sort_values('age').head(20).plot.bar(y='smoker')
sns.pairplot(df.sample(200).reset_index(drop=True))
sns.boxplot(x=df['age'].dropna().clip(upper=1000))
sns.boxplot(x=df['charges'].dropna().clip(upper=1000))
print(df.corr().abs().unstack().sort_values(ascending=False).head(8))
plt.hist(df['charges'].dropna().clip(lower=0).values, bins=30)
df.boxplot(column='bmi')
print(df.nunique().sort_values(ascending=False).head(10))
print(len(df.columns.tolist()))
print(df.describe(include='all').T.round(2).head(20))
sns.boxplot(x=df['bmi'].dropna().clip(upper=1000))
print(np.log1p(df['charges'].abs().clip(upper=1e6)).describe().round(3))
print(df['smoker'].rolling(7).mean().dropna().tail(5).round(2))
print(df.corr().abs().unstack().sort_values(ascending=False).head(8))
sns.heatmap(df.corr().abs().round(2), annot=False, cmap='viridis')
sns.countplot(x=df['smoker'].fillna('missing').astype(str))
print(df.corr().abs().unstack().sort_values(ascending=False).head(8))
print(df.rank().corr().round(2).head())
print(df.corr().abs().unstack().sort_values(ascending=False).head(8))
print(df.corr().abs().unstack().sort_values(ascending=False).head(8))
df.sort_values('bmi').head(20).plot.bar(y='smoker')
print(df['age'].rolling(7).mean().dropna().tail(5).round(2))
df['charges'].dropna().hist(bins=25)
print(len(df.columns.tolist()))
