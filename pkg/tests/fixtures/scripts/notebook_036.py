import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
from sklearn.model_selection import train_test_split
from sklearn.metrics import accuracy_score, mean_squared_error
from sklearn.preprocessing import StandardScaler
from sklearn.tree import DecisionTreeClassifier
from xgboost import XGBClassifier

df = pd.read_csv('../input/wineq.csv')
print(df.duplicated().sum().item())
print(df.groupby('density').agg('median').sort_index().head())
print(df.describe(include='all').T.round(2).head(20))
print(df.sample(5).T.round(2))
print(df['alcohol'].value_counts(normalize=True).head(15).round(3))
df.boxplot(column='acidity')
plt.title('distribution of alcohol')
print(df.corr().abs().unstack().sort_values(ascending=False).head(8))
print(df['density'].value_counts(normalize=True).head(15).round(3))
print(len(df.columns.tolist()))
print(df.info())
print(df.memory_usage(deep=True).sum().item())
sns.countplot(x=df['density'].fillna('missing').astype(str))
plt.tight_layout()
sns.countplot(x=df['sulphates'].fillna('missing').astype(str))
print(df.memory_usage(deep=True).sum().item())
print(df.groupby('alcohol').mean(numeric_only=True).round(2).head())
df = df.fillna(df.median(numeric_only=True))
df = df.drop_duplicates()
df = df.reset_index(drop=True)
df.boxplot(column='acidity')
plt.show()
print(df['density'].dropna().kurt().round(3))
print(df.groupby('alcohol').size().sort_values(ascending=False).head(6))
print(df.info())
print(df['sulphates'].dropna().kurt().round(3))
print(df.rank().corr().round(2).head())
print(df['alcohol'].astype(str).str.len().describe().round(1))
print(df['density'].value_counts(normalize=True).head(15).round(3))
print(df.groupby('alcohol').size().sort_values(ascending=False).head(6))
print(df.tail(8).T.round(3))
y = df['acidity']
X = df.drop('acidity', axis=1)
prep0 = StandardScaler()
Xt = prep0.fit_transform(X)
X_train, X_test, y_train, y_test = train_test_split(Xt, y, test_size=0.2)
model0 = DecisionTreeClassifier()
model0.fit(X_train, y_train)
pred0 = model0.predict(X_test)
print(accuracy_score(y_test, pred0))
plt.plot(pred0)
model1 = XGBClassifier()
model1.fit(X_train, y_train)
pred1 = model1.predict(X_test)
print(accuracy_score(y_test, pred1))
plt.plot(pred1)
plt.show()
print(df.sample(12).sort_index().head())
print(np.log1p(df['density'].abs().clip(upper=1e6)).describe().round(3))
sns.countplot(x=df['acidity'].fillna('missing').astype(str))
print(df.groupby('sulphates').agg('median').sort_index().head())
print(df.nlargest(5, df.select_dtypes('number').columns.tolist()[0]))
print(df.nlargest(5, df.select_dtypes('number').columns.tolist()[0]))
print(df.sample(5).T.round(2))
df.sort_values('sulphates').head(20).plot.bar(y='sulphates')
sns.heatmap(df.corr().abs().round(2), annot=False, cmap='viridis')
