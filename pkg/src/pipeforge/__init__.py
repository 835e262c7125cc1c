"""pipeforge: mine ML scripts into operator graphs, learn to generate them,
and recommend time-budgeted pipeline skeletons for unseen tabular datasets.

The package is organized around the stages of that workflow:

* :mod:`pipeforge.analyzer`  : parse scripts into per-script code graphs
* :mod:`pipeforge.filtering` : reduce code graphs to operator pipelines
* :mod:`pipeforge.profiling` : content embeddings + nearest-neighbor index
* :mod:`pipeforge.traces`    : canonical decision sequences of a graph
* :mod:`pipeforge.generator` : autoregressive graph model (train/generate)
* :mod:`pipeforge.skeletons` : graphs -> preprocessors+estimator skeletons
* :mod:`pipeforge.prep`      : dataset preparation and budget planning
* :mod:`pipeforge.metrics`   : evaluation metrics and frequency reports
* :mod:`pipeforge.cli`       : the ``pipeforge`` command
"""

__version__ = "0.1.0"
