"""Run time-budgeted hyperparameter searches over pipeforge skeleton files.

The bridge consumes two file contracts and nothing else: the skeleton JSON
(schema v1) and the prepared-dataset manifest next to its numeric matrix.
Each skeleton becomes an sklearn Pipeline whose hyperparameters are searched
by random sampling within the stamped per-skeleton wall-clock budget.
"""

__version__ = "0.1.0"
