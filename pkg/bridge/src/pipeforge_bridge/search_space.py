"""Hyperparameter distributions per operator, keyed by class name.

Only the operators named in a skeleton are searched; everything else keeps
sklearn defaults. Spaces are deliberately small: the search is random
sampling under a wall-clock budget, so a compact grid keeps candidate
evaluations meaningful on small budgets.
"""

from __future__ import annotations

PARAM_SPACES: dict[str, dict[str, list]] = {
    # estimators -----------------------------------------------------------
    "LogisticRegression": {
        "C": [0.01, 0.1, 1.0, 10.0, 100.0],
        "max_iter": [300],
    },
    "SGDClassifier": {
        "alpha": [1e-5, 1e-4, 1e-3, 1e-2],
        "penalty": ["l2", "l1"],
    },
    "LinearRegression": {},
    "Ridge": {"alpha": [0.01, 0.1, 1.0, 10.0, 100.0]},
    "Lasso": {"alpha": [0.001, 0.01, 0.1, 1.0]},
    "ElasticNet": {
        "alpha": [0.001, 0.01, 0.1, 1.0],
        "l1_ratio": [0.2, 0.5, 0.8],
    },
    "RandomForestClassifier": {
        "n_estimators": [50, 100, 200],
        "max_depth": [None, 4, 8, 16],
        "min_samples_split": [2, 5, 10],
    },
    "RandomForestRegressor": {
        "n_estimators": [50, 100, 200],
        "max_depth": [None, 4, 8, 16],
        "min_samples_split": [2, 5, 10],
    },
    "ExtraTreesClassifier": {
        "n_estimators": [50, 100, 200],
        "max_depth": [None, 4, 8, 16],
    },
    "ExtraTreesRegressor": {
        "n_estimators": [50, 100, 200],
        "max_depth": [None, 4, 8, 16],
    },
    "GradientBoostingClassifier": {
        "n_estimators": [50, 100, 200],
        "learning_rate": [0.03, 0.1, 0.3],
        "max_depth": [2, 3, 5],
    },
    "GradientBoostingRegressor": {
        "n_estimators": [50, 100, 200],
        "learning_rate": [0.03, 0.1, 0.3],
        "max_depth": [2, 3, 5],
    },
    "AdaBoostClassifier": {
        "n_estimators": [50, 100, 200],
        "learning_rate": [0.1, 0.5, 1.0],
    },
    "AdaBoostRegressor": {
        "n_estimators": [50, 100, 200],
        "learning_rate": [0.1, 0.5, 1.0],
    },
    "DecisionTreeClassifier": {
        "max_depth": [None, 4, 8, 16],
        "min_samples_split": [2, 5, 10],
    },
    "DecisionTreeRegressor": {
        "max_depth": [None, 4, 8, 16],
        "min_samples_split": [2, 5, 10],
    },
    "SVC": {"C": [0.1, 1.0, 10.0], "gamma": ["scale", "auto"]},
    "SVR": {"C": [0.1, 1.0, 10.0], "gamma": ["scale", "auto"]},
    "LinearSVC": {"C": [0.01, 0.1, 1.0, 10.0]},
    "KNeighborsClassifier": {
        "n_neighbors": [3, 5, 11, 21],
        "weights": ["uniform", "distance"],
    },
    "KNeighborsRegressor": {
        "n_neighbors": [3, 5, 11, 21],
        "weights": ["uniform", "distance"],
    },
    "GaussianNB": {"var_smoothing": [1e-9, 1e-7, 1e-5]},
    "MultinomialNB": {"alpha": [0.01, 0.1, 1.0]},
    "KMeans": {"n_clusters": [2, 4, 8]},
    # preprocessors --------------------------------------------------------
    "StandardScaler": {},
    "MinMaxScaler": {},
    "RobustScaler": {},
    "MaxAbsScaler": {},
    "Normalizer": {"norm": ["l2", "l1"]},
    "PolynomialFeatures": {"degree": [2]},
    "QuantileTransformer": {"n_quantiles": [100]},
    "PowerTransformer": {},
    "OneHotEncoder": {"handle_unknown": ["ignore"]},
    "OrdinalEncoder": {},
    "SimpleImputer": {"strategy": ["mean", "median", "most_frequent"]},
    "KNNImputer": {"n_neighbors": [3, 5]},
    "PCA": {"n_components": [0.5, 0.8, 0.95]},
    "TruncatedSVD": {},
    "SelectKBest": {},  # k filled in at runtime from the feature count
    "VarianceThreshold": {},
}


def space_for(class_name: str, n_features: int) -> dict[str, list]:
    space = dict(PARAM_SPACES.get(class_name, {}))
    if class_name == "SelectKBest":
        ks = sorted({max(1, n_features // 2), max(1, (3 * n_features) // 4),
                     n_features})
        space["k"] = ks
    if class_name == "TruncatedSVD" and n_features > 2:
        space["n_components"] = sorted({2, max(2, n_features // 2),
                                        max(2, n_features - 1)})
    return space
