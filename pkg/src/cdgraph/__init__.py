"""Character degree graphs with a cut-vertex: constructors, classifier, checks."""

from .degree_graphs import (
    DegreeSet,
    SimpleFamily,
    family_graph,
    graph_from_degrees,
    psl2_graph,
    sporadic_graph,
    sz_graph,
)
from .graph import (
    PrimeGraph,
    components,
    connectivity_degree,
    connectivity_report,
    cut_vertices,
    join,
)
from .numtheory import factor, pi_set, prime_form, zsygmondy

__version__ = "0.1.0"
