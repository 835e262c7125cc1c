#!/usr/bin/env python3
"""Generate the committed synthetic fixture corpus under tests/fixtures/.

Scripts mimic Kaggle-style notebooks: a read_csv, a wall of chained EDA and
plotting calls, then a handful of whitelisted preprocessing/estimator
operations. The junk density is deliberate so filtering shows the same
orders-of-magnitude reduction the real miner sees.

Deterministic for a fixed seed; outputs are committed, so rerun only when
the corpus design changes.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "tests" / "fixtures"

DATASETS = [
    "churn", "houseprice", "titanic3", "sensors", "creditrisk",
    "salesq1", "wineq", "heartcond", "insurance", "retail",
]

PREPROCESSORS = [
    ("StandardScaler", "sklearn.preprocessing", "fit_transform"),
    ("MinMaxScaler", "sklearn.preprocessing", "fit_transform"),
    ("RobustScaler", "sklearn.preprocessing", "fit_transform"),
    ("SimpleImputer", "sklearn.impute", "fit_transform"),
    ("PCA", "sklearn.decomposition", "fit_transform"),
    ("SelectKBest", "sklearn.feature_selection", "fit_transform"),
    ("OneHotEncoder", "sklearn.preprocessing", "fit_transform"),
    ("LabelEncoder", "sklearn.preprocessing", "fit_transform"),
]

CLASSIFIERS = [
    ("LogisticRegression", "sklearn.linear_model"),
    ("RandomForestClassifier", "sklearn.ensemble"),
    ("GradientBoostingClassifier", "sklearn.ensemble"),
    ("DecisionTreeClassifier", "sklearn.tree"),
    ("KNeighborsClassifier", "sklearn.neighbors"),
    ("SVC", "sklearn.svm"),
    ("XGBClassifier", "xgboost"),
    ("LGBMClassifier", "lightgbm"),
]

REGRESSORS = [
    ("LinearRegression", "sklearn.linear_model"),
    ("Ridge", "sklearn.linear_model"),
    ("RandomForestRegressor", "sklearn.ensemble"),
    ("GradientBoostingRegressor", "sklearn.ensemble"),
    ("XGBRegressor", "xgboost"),
]

# Which estimator families each dataset's notebooks tend to use; gives the
# generator a learnable dataset -> operators association.
DATASET_TASK = {
    "churn": "clf", "houseprice": "reg", "titanic3": "clf", "sensors": "reg",
    "creditrisk": "clf", "salesq1": "reg", "wineq": "clf", "heartcond": "clf",
    "insurance": "reg", "retail": "reg",
}

EDA_LINES = [
    "print(df.head(10).describe().T.round(2))",
    "print(df.tail(8).T.round(3))",
    "print(df.sample(12).sort_index().head())",
    "print(df.info())",
    "print(df.describe(include='all').T.round(2).head(20))",
    "print(df.isnull().sum().sort_values(ascending=False).head(12))",
    "print(df.nunique().sort_values(ascending=False).head(10))",
    "print(df.dtypes.value_counts().sort_index())",
    "print(df.corr().abs().unstack().sort_values(ascending=False).head(8))",
    "print(df.duplicated().sum().item())",
    "print(df['{col}'].value_counts(normalize=True).head(15).round(3))",
    "print(df['{col}'].describe().round(3))",
    "print(df.groupby('{col}').mean(numeric_only=True).round(2).head())",
    "print(df.groupby('{col}').size().sort_values(ascending=False).head(6))",
    "print(df.groupby('{col}').agg('median').sort_index().head())",
    "print(df.sample(5).T.round(2))",
    "plt.figure(figsize=(10, 6))",
    "plt.hist(df['{col}'].dropna().clip(lower=0).values, bins=30)",
    "plt.title('distribution of {col}')",
    "plt.tight_layout()",
    "plt.show()",
    "sns.heatmap(df.corr().abs().round(2), annot=False, cmap='viridis')",
    "sns.countplot(x=df['{col}'].fillna('missing').astype(str))",
    "sns.boxplot(x=df['{col}'].dropna().clip(upper=1000))",
    "sns.pairplot(df.sample(200).reset_index(drop=True))",
    "df['{col}'].dropna().hist(bins=25)",
    "df.plot.scatter(x='{col}', y='{col2}')",
    "df.sort_values('{col}').head(20).plot.bar(y='{col2}')",
    "df.boxplot(column='{col}')",
    "print(len(df.columns.tolist()))",
    "print(df.memory_usage(deep=True).sum().item())",
    "print(df['{col}'].isna().mean().round(4).item())",
    "print(df['{col}'].dropna().skew().round(3))",
    "print(df['{col}'].dropna().kurt().round(3))",
    "print(np.log1p(df['{col}'].abs().clip(upper=1e6)).describe().round(3))",
    "print(np.unique(df['{col}'].dropna().values).shape)",
    "print(df['{col}'].rolling(7).mean().dropna().tail(5).round(2))",
    "print(df['{col}'].astype(str).str.len().describe().round(1))",
    "print(df.rank().corr().round(2).head())",
    "print(df.nlargest(5, df.select_dtypes('number').columns.tolist()[0]))",
]

CLEAN_LINES = [
    "df = df.drop_duplicates()",
    "df = df.dropna(axis=0, thresh=3)",
    "df = df.reset_index(drop=True)",
    "df = df.fillna(df.median(numeric_only=True))",
    "df['{col}'] = df['{col}'].fillna(df['{col}'].mode().iat[0])",
    "df['{col}'] = df['{col}'].astype('float64')",
    "df['{col}_log'] = np.log1p(df['{col}'].clip(lower=0))",
    "df = df.rename(columns=str.lower)",
]

COLS = {
    "churn": ["tenure", "charges", "contract", "usage"],
    "houseprice": ["sqft", "lotarea", "yearbuilt", "grade"],
    "titanic3": ["age", "fare", "pclass", "embarked"],
    "sensors": ["temp", "humidity", "pressure", "vibration"],
    "creditrisk": ["income", "debt", "utilization", "history"],
    "salesq1": ["units", "price", "discount", "region"],
    "wineq": ["acidity", "sulphates", "alcohol", "density"],
    "heartcond": ["age", "chol", "thalach", "oldpeak"],
    "insurance": ["age", "bmi", "charges", "smoker"],
    "retail": ["basket", "visits", "spend", "recency"],
}


def eda_block(rng: random.Random, dataset: str, n: int) -> list[str]:
    cols = COLS[dataset]
    lines = []
    for _ in range(n):
        template = rng.choice(EDA_LINES)
        line = template.replace("{col2}", rng.choice(cols))
        line = line.replace("{col}", rng.choice(cols))
        lines.append(line)
    return lines


def make_script(rng: random.Random, index: int, dataset: str,
                with_estimator: bool, read_via_variable: bool) -> str:
    cols = COLS[dataset]
    task = DATASET_TASK[dataset]
    estimators = CLASSIFIERS if task == "clf" else REGRESSORS

    n_prep = rng.randint(1, 3)
    preps = rng.sample(PREPROCESSORS[:6], n_prep)
    n_est = 1 if rng.random() < 0.8 else 2
    ests = rng.sample(estimators, n_est) if with_estimator else []

    imports = [
        "import numpy as np",
        "import pandas as pd",
        "import matplotlib.pyplot as plt",
        "import seaborn as sns",
        "from sklearn.model_selection import train_test_split",
        "from sklearn.metrics import accuracy_score, mean_squared_error",
    ]
    for name, module, _ in preps:
        imports.append(f"from {module} import {name}")
    for name, module in ests:
        imports.append(f"from {module} import {name}")

    body = []
    if read_via_variable:
        body.append("data_path = get_input_path()")
        body.append("df = pd.read_csv(data_path)")
    else:
        body.append(f"df = pd.read_csv('../input/{dataset}.csv')")

    body += eda_block(rng, dataset, rng.randint(16, 22))
    for template in rng.sample(CLEAN_LINES, rng.randint(2, 4)):
        body.append(template.replace("{col}", rng.choice(cols)))
    body += eda_block(rng, dataset, rng.randint(10, 16))

    if with_estimator:
        body.append(f"y = df['{cols[0]}']")
        body.append(f"X = df.drop('{cols[0]}', axis=1)")
        feed = "X"
        for step, (name, _, method) in enumerate(preps):
            var = f"prep{step}"
            body.append(f"{var} = {name}()")
            body.append(f"{feed}t = {var}.{method}({feed})")
            feed = f"{feed}t"
        body.append(f"X_train, X_test, y_train, y_test = "
                    f"train_test_split({feed}, y, test_size=0.2)")
        for step, (name, _) in enumerate(ests):
            var = f"model{step}"
            body.append(f"{var} = {name}()")
            body.append(f"{var}.fit(X_train, y_train)")
            body.append(f"pred{step} = {var}.predict(X_test)")
            if task == "clf":
                body.append(f"print(accuracy_score(y_test, pred{step}))")
            else:
                body.append(f"print(mean_squared_error(y_test, pred{step}))")
            body.append(f"plt.plot(pred{step})")
        body.append("plt.show()")
    else:
        body += eda_block(rng, dataset, 8)

    # Pad with more EDA until the script reaches notebook-ish length.
    while len(imports) + len(body) + 2 < 68:
        body.append(eda_block(rng, dataset, 1)[0])

    lines = imports + [""] + body + [""]
    return "\n".join(lines)


def write_scripts(rng: random.Random) -> dict[str, str]:
    out_dir = FIXTURES / "scripts"
    out_dir.mkdir(parents=True, exist_ok=True)
    sidecar: dict[str, str] = {}
    counter = 0
    # 86 estimator-bearing scripts across the 10 datasets, 8 EDA-only, and
    # 2 whose read path comes from a helper (sidecar-linked); 4 scripts of
    # the 86 read via variable: 2 sidecar-known, 2 unknown.
    plan: list[tuple[str, bool, str]] = []
    for i in range(86):
        dataset = DATASETS[i % len(DATASETS)]
        plan.append((dataset, True, "literal"))
    for i in range(8):
        plan.append((DATASETS[(i * 3) % len(DATASETS)], False, "literal"))
    plan[5] = (plan[5][0], True, "sidecar")
    plan[17] = (plan[17][0], True, "sidecar")
    plan[29] = (plan[29][0], True, "unknown")
    plan[41] = (plan[41][0], True, "unknown")

    for dataset, with_estimator, linking in plan:
        name = f"notebook_{counter:03d}"
        counter += 1
        text = make_script(rng, counter, dataset, with_estimator,
                           read_via_variable=linking != "literal")
        (out_dir / f"{name}.py").write_text(text)
        if linking == "sidecar":
            sidecar[name] = dataset
    (FIXTURES / "sidecar.json").write_text(json.dumps(sidecar, indent=2,
                                                      sort_keys=True))
    return sidecar


def _numeric_col(rng: random.Random, n: int, low: float, high: float,
                 decimals: int = 2, missing: float = 0.0) -> list[str]:
    out = []
    for _ in range(n):
        if missing and rng.random() < missing:
            out.append("")
        else:
            out.append(f"{rng.uniform(low, high):.{decimals}f}")
    return out


def _cat_col(rng: random.Random, n: int, values: list[str],
             missing: float = 0.0) -> list[str]:
    return ["" if missing and rng.random() < missing else rng.choice(values)
            for _ in range(n)]


def write_dataset_csvs(rng: random.Random) -> None:
    out_dir = FIXTURES / "datasets"
    out_dir.mkdir(parents=True, exist_ok=True)
    specs = {
        "churn": (["tenure", "charges", "contract", "usage", "label"],
                  lambda n: [
                      _numeric_col(rng, n, 1, 72, 0),
                      _numeric_col(rng, n, 20, 120),
                      _cat_col(rng, n, ["monthly", "yearly", "biennial"]),
                      _numeric_col(rng, n, 0, 500),
                      _cat_col(rng, n, ["stay", "leave"]),
                  ]),
        "houseprice": (["sqft", "lotarea", "yearbuilt", "grade", "price"],
                       lambda n: [
                           _numeric_col(rng, n, 400, 5200, 0),
                           _numeric_col(rng, n, 1000, 30000, 0),
                           _numeric_col(rng, n, 1880, 2020, 0),
                           _cat_col(rng, n, ["a", "b", "c", "d"]),
                           _numeric_col(rng, n, 50_000, 900_000, 0),
                       ]),
        "titanic3": (["age", "fare", "pclass", "embarked", "survived"],
                     lambda n: [
                         _numeric_col(rng, n, 1, 80, 0, missing=0.12),
                         _numeric_col(rng, n, 5, 512),
                         _cat_col(rng, n, ["1", "2", "3"]),
                         _cat_col(rng, n, ["S", "C", "Q"], missing=0.02),
                         _cat_col(rng, n, ["0", "1"]),
                     ]),
        "sensors": (["temp", "humidity", "pressure", "vibration", "output"],
                    lambda n: [
                        _numeric_col(rng, n, -10, 45),
                        _numeric_col(rng, n, 10, 95),
                        _numeric_col(rng, n, 950, 1050),
                        _numeric_col(rng, n, 0, 8, 4),
                        _numeric_col(rng, n, 0, 100),
                    ]),
        "creditrisk": (["income", "debt", "utilization", "history", "default"],
                       lambda n: [
                           _numeric_col(rng, n, 12_000, 250_000, 0),
                           _numeric_col(rng, n, 0, 80_000, 0),
                           _numeric_col(rng, n, 0, 1, 3),
                           _cat_col(rng, n, ["poor", "fair", "good", "excellent"]),
                           _cat_col(rng, n, ["0", "1"]),
                       ]),
        "salesq1": (["units", "price", "discount", "region", "revenue"],
                    lambda n: [
                        _numeric_col(rng, n, 1, 400, 0),
                        _numeric_col(rng, n, 3, 900),
                        _numeric_col(rng, n, 0, 0.5, 3),
                        _cat_col(rng, n, ["north", "south", "east", "west"]),
                        _numeric_col(rng, n, 10, 120_000),
                    ]),
        "wineq": (["acidity", "sulphates", "alcohol", "density", "quality"],
                  lambda n: [
                      _numeric_col(rng, n, 4, 16),
                      _numeric_col(rng, n, 0.2, 2),
                      _numeric_col(rng, n, 8, 15),
                      _numeric_col(rng, n, 0.98, 1.04, 5),
                      _cat_col(rng, n, ["3", "4", "5", "6", "7", "8"]),
                  ]),
        "heartcond": (["age", "chol", "thalach", "oldpeak", "target"],
                      lambda n: [
                          _numeric_col(rng, n, 25, 80, 0),
                          _numeric_col(rng, n, 120, 400, 0),
                          _numeric_col(rng, n, 70, 200, 0),
                          _numeric_col(rng, n, 0, 6, 1),
                          _cat_col(rng, n, ["0", "1"]),
                      ]),
        "insurance": (["age", "bmi", "charges", "smoker", "cost"],
                      lambda n: [
                          _numeric_col(rng, n, 18, 64, 0),
                          _numeric_col(rng, n, 15, 50),
                          _numeric_col(rng, n, 1000, 60_000),
                          _cat_col(rng, n, ["yes", "no"]),
                          _numeric_col(rng, n, 1000, 60_000),
                      ]),
        "retail": (["basket", "visits", "spend", "recency", "clv"],
                   lambda n: [
                       _numeric_col(rng, n, 1, 60, 0),
                       _numeric_col(rng, n, 1, 200, 0),
                       _numeric_col(rng, n, 5, 4000),
                       _numeric_col(rng, n, 0, 365, 0),
                       _numeric_col(rng, n, 10, 20_000),
                   ]),
    }
    for name, (header, maker) in specs.items():
        n = rng.randint(120, 220)
        columns = maker(n)
        _write_csv(out_dir / f"{name}.csv", header, columns)


def _write_csv(path: Path, header: list[str], columns: list[list[str]]) -> None:
    rows = ["%s" % ",".join(header)]
    n = len(columns[0])
    for i in range(n):
        rows.append(",".join(col[i] for col in columns))
    path.write_text("\n".join(rows) + "\n")


DOMAIN_SPECS = {
    "sales": (8, ["order_total", "quantity", "discount_pct", "region_name"],
              lambda rng, n: [
                  _numeric_col(rng, n, 5, 2000),
                  _numeric_col(rng, n, 1, 50, 0),
                  _numeric_col(rng, n, 0, 0.6, 3),
                  _cat_col(rng, n, ["emea", "apac", "amer", "latam"]),
              ]),
    "medical": (8, ["patient_age", "systolic_bp", "cholesterol", "outcome"],
                lambda rng, n: [
                    _numeric_col(rng, n, 18, 95, 0),
                    _numeric_col(rng, n, 90, 200, 0),
                    _numeric_col(rng, n, 100, 380, 0),
                    _cat_col(rng, n, ["stable", "acute", "chronic"]),
                ]),
    "reviews": (8, ["review_text", "stars", "verified"],
                lambda rng, n: [
                    [_review(rng) for _ in range(n)],
                    _cat_col(rng, n, ["1", "2", "3", "4", "5"]),
                    _cat_col(rng, n, ["yes", "no"]),
                ]),
    "telemetry": (7, ["cpu_load", "mem_used_mb", "io_wait_ms", "host_class"],
                  lambda rng, n: [
                      _numeric_col(rng, n, 0, 1, 4),
                      _numeric_col(rng, n, 128, 65_536, 0),
                      _numeric_col(rng, n, 0, 800),
                      _cat_col(rng, n, ["edge", "core", "cache"]),
                  ]),
    "athletics": (7, ["sprint_time", "jump_cm", "heart_rate", "division"],
                  lambda rng, n: [
                      _numeric_col(rng, n, 9.5, 16.5),
                      _numeric_col(rng, n, 110, 310, 0),
                      _numeric_col(rng, n, 55, 190, 0),
                      _cat_col(rng, n, ["junior", "open", "masters"]),
                  ]),
}

_REVIEW_WORDS = ("great product quality shipping arrived broken love hate "
                 "recommend terrible excellent okay value money waste "
                 "perfect disappointed fast slow packaging return sturdy "
                 "cheap bright quiet loud battery screen comfortable").split()


def _review(rng: random.Random) -> str:
    n = rng.randint(6, 18)
    return " ".join(rng.choice(_REVIEW_WORDS) for _ in range(n))


def write_domain_csvs(rng: random.Random) -> None:
    out_dir = FIXTURES / "domains"
    out_dir.mkdir(parents=True, exist_ok=True)
    for domain, (count, header, maker) in DOMAIN_SPECS.items():
        for i in range(count):
            n = rng.randint(100, 180)
            columns = maker(rng, n)
            _write_csv(out_dir / f"{domain}_{i:02d}.csv", header, columns)


def write_bundled_5k(rng: random.Random) -> None:
    n = 5000
    header = ["f_num1", "f_num2", "f_num3", "f_cat", "note", "label"]
    columns = [
        _numeric_col(rng, n, 0, 100),
        _numeric_col(rng, n, -5, 5, 4),
        _numeric_col(rng, n, 1000, 9000, 0, missing=0.05),
        _cat_col(rng, n, ["alpha", "beta", "gamma", "delta"]),
        [_review(rng) for _ in range(n)],
        _cat_col(rng, n, ["0", "1"]),
    ]
    _write_csv(FIXTURES / "bundled_5k.csv", header, columns)


def main() -> None:
    rng = random.Random(20240817)
    sidecar = write_scripts(rng)
    write_dataset_csvs(rng)
    write_domain_csvs(rng)
    write_bundled_5k(rng)
    print(f"scripts: {len(list((FIXTURES / 'scripts').glob('*.py')))}")
    print(f"sidecar entries: {len(sidecar)}")
    print(f"datasets: {len(list((FIXTURES / 'datasets').glob('*.csv')))}")
    print(f"domains: {len(list((FIXTURES / 'domains').glob('*.csv')))}")


if __name__ == "__main__":
    main()
