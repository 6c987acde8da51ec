"""Quotient quantum graphs and numerical isospectrality checks.

Graphs, actions and representations are handles created from the catalog
or from the JSON formats shared with the ``isograph`` command-line tool.
"""

import json

from ._isograph import (
    Action,
    CatalogEntry,
    Comparison,
    CriterionResult,
    Graph,
    Group,
    InputError,
    Quotient,
    Rep,
    Spectrum,
    Transplant,
    TransplantReport,
    VerificationError,
    basis_change_transplant,
    build_quotient,
    builtin_group,
    catalog_entry,
    catalog_ids,
    compare_spectra,
    eigenvalues,
    induction_pair,
    merge_spectra,
    r_spectrum,
    selfcheck,
    verify_transplant,
)


def load_graph(path):
    """Read a graph or quotient file."""
    with open(path, encoding="utf-8") as f:
        return Graph.from_json(f.read())


def load_action(path, graph):
    with open(path, encoding="utf-8") as f:
        return Action.from_json(f.read(), graph)


def load_rep(path):
    with open(path, encoding="utf-8") as f:
        return Rep.from_json(f.read())


def graph_dict(graph):
    """The graph in its JSON file layout as plain Python objects."""
    return json.loads(graph.to_json())


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
