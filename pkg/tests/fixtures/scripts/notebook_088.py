import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
from sklearn.model_selection import train_test_split
from sklearn.metrics import accuracy_score, mean_squared_error
from sklearn.impute import SimpleImputer

df = pd.read_csv('../input/wineq.csv')
df.plot.scatter(x='acidity', y='alcohol')
print(df['sulphates'].value_counts(normalize=True).head(15).round(3))
print(df.groupby('alcohol').agg('median').sort_index().head())
print(df.info())
print(df.groupby('density').agg('median').sort_index().head())
print(df.groupby('density').mean(numeric_only=True).round(2).head())
sns.heatmap(df.corr().abs().round(2), annot=False, cmap='viridis')
print(df['density'].dropna().skew().round(3))
plt.title('distribution of sulphates')
df.plot.scatter(x='acidity', y='sulphates')
print(df.nlargest(5, df.select_dtypes('number').columns.tolist()[0]))
print(df.describe(include='all').T.round(2).head(20))
df.plot.scatter(x='alcohol', y='density')
print(df['acidity'].describe().round(3))
df.boxplot(column='sulphates')
print(df.describe(include='all').T.round(2).head(20))
df = df.fillna(df.median(numeric_only=True))
df = df.drop_duplicates()
df['alcohol'] = df['alcohol'].fillna(df['alcohol'].mode().iat[0])
df = df.dropna(axis=0, thresh=3)
print(df['sulphates'].rolling(7).mean().dropna().tail(5).round(2))
print(df.info())
print(df.groupby('acidity').agg('median').sort_index().head())
print(df.groupby('sulphates').size().sort_values(ascending=False).head(6))
print(df.isnull().sum().sort_values(ascending=False).head(12))
plt.show()
print(df.isnull().sum().sort_values(ascending=False).head(12))
print(df.rank().corr().round(2).head())
df['alcohol'].dropna().hist(bins=25)
print(df.groupby('alcohol').agg('median').sort_index().head())
print(np.log1p(df['acidity'].abs().clip(upper=1e6)).describe().round(3))
df['sulphates'].dropna().hist(bins=25)
print(df['acidity'].dropna().skew().round(3))
plt.title('distribution of acidity')
print(df.groupby('density').mean(numeric_only=True).round(2).head())
print(df.describe(include='all').T.round(2).head(20))
plt.title('distribution of acidity')
print(df.describe(include='all').T.round(2).head(20))
print(df.nunique().sort_values(ascending=False).head(10))
print(df.memory_usage(deep=True).sum().item())
print(df['alcohol'].isna().mean().round(4).item())
print(df['alcohol'].describe().round(3))
plt.hist(df['density'].dropna().clip(lower=0).values, bins=30)
print(df['density'].dropna().kurt().round(3))
print(df['alcohol'].dropna().kurt().round(3))
print(df.info())
print(df['density'].rolling(7).mean().dropna().tail(5).round(2))
print(df['acidity'].dropna().kurt().round(3))
print(df.groupby('acidity').size().sort_values(ascending=False).head(6))
print(df.head(10).describe().T.round(2))
print(df['alcohol'].dropna().kurt().round(3))
df['alcohol'].dropna().hist(bins=25)
print(df['sulphates'].value_counts(normalize=True).head(15).round(3))
print(df.groupby('sulphates').agg('median').sort_index().head())
print(df.corr().abs().unstack().sort_values(ascending=False).head(8))
print(df.isnull().sum().sort_values(ascending=False).head(12))
print(df.tail(8).T.round(3))
print(df.groupby('density').size().sort_values(ascending=False).head(6))
