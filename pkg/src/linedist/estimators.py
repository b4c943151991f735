"""scikit-learn style front ends.

Each estimator takes a graph as ``X`` (anything :func:`check_graph`
accepts), stores its results in trailing-underscore attributes, and
supports ``get_params``/``set_params``/``clone`` through ``BaseEstimator``.
Colourings play the role of cluster labels, so the colouring estimators
follow the ``fit_predict``/``labels_`` convention.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._config import config_context
from .distinguish import break_symmetry, distinguishing_number
from .linegraph import clusters, iterate
from .treesym import predict_increase
from .validation import check_graph, check_nonnegative, check_positive


class LineGraphTransformer(TransformerMixin, BaseEstimator):
    """Map a graph to its ``iterations``-fold line graph."""

    def __init__(self, iterations=1, vertex_cap=None):
        self.iterations = iterations
        self.vertex_cap = vertex_cap

    def fit(self, X, y=None):
        check_nonnegative("iterations", self.iterations)
        check_positive("vertex_cap", self.vertex_cap, allow_none=True)
        g = check_graph(X)
        self.chain_ = iterate(g, self.iterations, self.vertex_cap)
        self.n_vertices_ = self.chain_.top.n
        return self

    def transform(self, X):
        check_is_fitted(self, "chain_")
        g = check_graph(X)
        if g == self.chain_.base:
            return self.chain_.top
        return iterate(g, self.iterations, self.vertex_cap).top


class ClusterTransformer(TransformerMixin, BaseEstimator):
    """Label every vertex of ``L^{2*depth}(G)`` with its ancestor in ``G``."""

    def __init__(self, depth=1, vertex_cap=None):
        self.depth = depth
        self.vertex_cap = vertex_cap

    def fit(self, X, y=None):
        check_positive("depth", self.depth)
        g = check_graph(X, connected=True)
        self.family_ = clusters(g, self.depth, vertex_cap=self.vertex_cap)
        self.cluster_sizes_ = self.family_.sizes()
        return self

    def transform(self, X):
        check_is_fitted(self, "family_")
        g = check_graph(X, connected=True)
        if g != self.family_.chain.base:
            return clusters(g, self.depth, vertex_cap=self.vertex_cap).label
        return self.family_.label


class DistinguishingColorer(BaseEstimator):
    """Optimal symmetry-breaking colouring by exact search."""

    def __init__(self, max_colors=None, work_cap=None):
        self.max_colors = max_colors
        self.work_cap = work_cap

    def fit(self, X, y=None):
        check_positive("max_colors", self.max_colors, allow_none=True)
        g = check_graph(X)
        caps = {} if self.work_cap is None else {"work_cap": self.work_cap}
        with config_context(**caps):
            self.n_colors_, self.coloring_ = distinguishing_number(g, self.max_colors)
        self.labels_ = self.coloring_.colors
        return self

    def fit_predict(self, X, y=None):
        return self.fit(X).labels_


class SymmetryBreaker(BaseEstimator):
    """Two-colouring of a deep iterate that no automorphism preserves."""

    def __init__(self, remark_opt=False, vertex_cap=None):
        self.remark_opt = remark_opt
        self.vertex_cap = vertex_cap

    def fit(self, X, y=None):
        g = check_graph(X, connected=True)
        self.certificate_ = break_symmetry(g, bool(self.remark_opt), self.vertex_cap)
        self.stabilization_index_ = self.certificate_.K
        self.labels_ = self.certificate_.coloring.colors
        return self

    def fit_predict(self, X, y=None):
        return self.fit(X).labels_


class TreeSymmetryAnalyzer(BaseEstimator):
    """Predict whether a tree's distinguishing number grows under ``L``."""

    def fit(self, X, y=None):
        t = check_graph(X, tree=True)
        self.prediction_ = predict_increase(t)
        self.decomposition_ = self.prediction_.decomposition
        self.distinguishing_number_ = self.prediction_.k
        self.increases_ = self.prediction_.increases
        return self

    def predict(self, X):
        t = check_graph(X, tree=True)
        check_is_fitted(self, "prediction_")
        if t == self.decomposition_.tree:
            return self.increases_
        return predict_increase(t).increases
