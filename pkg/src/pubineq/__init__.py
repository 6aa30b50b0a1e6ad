"""Publication-inequality analysis toolkit.

Ingests conference publication exports, normalizes author identities,
computes windowed publication rates and Gini/Lotka/RPD inequality metrics,
fits LDA topic models per country, builds country-level embedding similarity
matrices, and scans for likely duplicate publications.
"""

__version__ = "0.1.0"
