"""Submodule providing exact burning numbers, bounds and certificates."""

from dataclasses import dataclass, field
from math import isqrt
from typing import Dict, Iterable, List, Optional, Sequence, Tuple
import networkx as nx
from tqdm.auto import tqdm
from burning.graph import Graph
from burning.traversal import UNREACHABLE, _bfs, check_connected, is_simple_path, metrics
from burning.burn_model import BurningSequence, _propagate
from burning.heuristics import path_burning_completion, path_burning_schedule
from burning.generators.naming import parse_instance_name
from burning.exceptions import (
    BudgetExceededError,
    DisconnectedGraphError,
    NotAPathError,
    NotClusterGraphError,
)

DEFAULT_NODE_BUDGET: int = 10**7


def _ceil_sqrt(value: int) -> int:
    """Return ceil(sqrt(value)) for a positive integer."""
    return isqrt(value - 1) + 1


def bn2_characterization(graph: Graph) -> bool:
    """Return whether n >= 2 and the maximum degree is n - 1 or n - 2."""
    return graph.vertex_count >= 2 and graph.max_degree >= graph.vertex_count - 2


def trivial_lower_bound(graph: Graph) -> int:
    """Return 1 for at most one vertex, 2 when bn(G) = 2 holds, 3 otherwise."""
    if graph.vertex_count <= 1:
        return 1
    if bn2_characterization(graph):
        return 2
    return 3


@dataclass(frozen=True)
class GenericBound:
    """The proven 2 sqrt(n) - 1 bound and the conjectured ceil(sqrt(n)) value."""

    upper: int
    conjectured: int


def generic_upper_bound(vertex_count: int) -> GenericBound:
    """Return ceil(2 sqrt(n) - 1) with the conjectured ceil(sqrt(n)) alongside."""
    assert vertex_count >= 1, f"Invalid vertex count: {vertex_count}"
    return GenericBound(
        # ceil(2 sqrt(n)) - 1 = ceil(sqrt(4n)) - 1
        upper=isqrt(4 * vertex_count - 1),
        conjectured=_ceil_sqrt(vertex_count),
    )


@dataclass(frozen=True)
class ThetaBound:
    """Admissible burning numbers of a theta graph on n vertices.

    `q` is floor(sqrt(n)), the allowed values are q and q + 1 and the
    expected best is q + 1. The decomposition n = q'^2 + r' with
    1 <= r' <= 2q' + 1 differs from q only at perfect squares, where
    q' = q - 1.
    """

    vertex_count: int
    q: int
    r: int
    decomposition_q: int
    decomposition_r: int

    @property
    def allowed(self) -> Tuple[int, int]:
        """Return the two admissible burning numbers."""
        return (self.q, self.q + 1)

    @property
    def expected(self) -> int:
        """Return the expected best burning sequence length."""
        return self.q + 1


def theta_bound(vertex_count: int) -> ThetaBound:
    """Return the theta graph bound for the given order."""
    assert vertex_count >= 1, f"Invalid vertex count: {vertex_count}"
    q = isqrt(vertex_count)
    decomposition_q = isqrt(vertex_count - 1)
    return ThetaBound(
        vertex_count=vertex_count,
        q=q,
        r=vertex_count - q * q,
        decomposition_q=decomposition_q,
        decomposition_r=vertex_count - decomposition_q * decomposition_q,
    )


def cluster_bound(path_vertices: int) -> int:
    """Return ceil(sqrt(d)) + 2 for a path modulator on d vertices."""
    assert path_vertices >= 1, f"Invalid path size: {path_vertices}"
    return _ceil_sqrt(path_vertices) + 2


@dataclass(frozen=True)
class Certificate:
    """One bound on the burning number and the result it comes from."""

    name: str
    value: int
    reason: str


@dataclass(frozen=True)
class BoundReport:
    """Lower and upper bounds on bn(G) with their certificates."""

    lower: int
    upper: int
    certificates: List[Certificate] = field(default_factory=list)

    def __post_init__(self):
        """Check that the bounds are consistent."""
        assert self.lower <= self.upper, f"Lower bound {self.lower} above upper {self.upper}."


@dataclass(frozen=True)
class AttachedBound:
    """The bound a result row is compared against."""

    name: str
    value: int
    is_upper: bool


def _path_vertices_from(name: Optional[str], metadata: Optional[Dict]) -> Optional[int]:
    """Return the cluster path size d from the instance name or the metadata."""
    parsed = parse_instance_name(name) if name else None
    if parsed is not None and parsed["family"] == "cluster":
        return parsed["d"]
    if metadata is not None and metadata.get("d") is not None:
        return int(metadata["d"])
    return None


def _is_theta(name: Optional[str], metadata: Optional[Dict]) -> bool:
    """Return whether the instance is a generated theta graph."""
    parsed = parse_instance_name(name) if name else None
    if parsed is not None:
        return parsed["family"] == "theta"
    return metadata is not None and metadata.get("family") == "theta"


def attach_bound(
    graph: Graph, name: Optional[str] = None, metadata: Optional[Dict] = None
) -> AttachedBound:
    """Return the bound a heuristic result on this instance is measured against.

    Instance names are consulted first, metadata second; other graphs get
    the trivial lower bound, which is not an upper bound.
    """
    if _is_theta(name, metadata):
        return AttachedBound("theta", theta_bound(graph.vertex_count).expected, True)
    path_vertices = _path_vertices_from(name, metadata)
    if path_vertices is not None:
        return AttachedBound("cluster", cluster_bound(path_vertices), True)
    return AttachedBound("trivial-lower", trivial_lower_bound(graph), False)


def bound_report(
    graph: Graph, name: Optional[str] = None, metadata: Optional[Dict] = None
) -> BoundReport:
    """Return every bound that applies to the connected graph."""
    lower = trivial_lower_bound(graph)
    reasons = {
        1: "bn(G) = 1 iff n = 1",
        2: "bn(G) = 2 iff n >= 2 and max degree >= n - 2",
        3: "n >= 2 and max degree < n - 2 rule out bn(G) <= 2",
    }
    certificates = [
        Certificate(
            "trivial-lower",
            lower,
            f"n={graph.vertex_count}, max degree {graph.max_degree}: {reasons[lower]}",
        )
    ]
    generic = generic_upper_bound(max(graph.vertex_count, 1))
    upper = generic.upper
    certificates.append(
        Certificate(
            "generic-upper",
            generic.upper,
            f"connected graphs burn within ceil(2 sqrt(n) - 1); conjectured {generic.conjectured}",
        )
    )
    if _is_theta(name, metadata):
        theta = theta_bound(graph.vertex_count)
        upper = min(upper, theta.expected)
        certificates.append(
            Certificate(
                "theta",
                theta.expected,
                f"theta graphs on n={graph.vertex_count} vertices burn in {theta.allowed}",
            )
        )
    path_vertices = _path_vertices_from(name, metadata)
    if path_vertices is not None:
        value = cluster_bound(path_vertices)
        upper = min(upper, value)
        certificates.append(
            Certificate(
                "cluster",
                value,
                f"bn(G) <= bn(G[A]) + 2 with G[A] a path on {path_vertices} vertices",
            )
        )
    return BoundReport(lower=lower, upper=max(upper, lower), certificates=certificates)


def exact_bn(
    graph: Graph,
    node_budget: int = DEFAULT_NODE_BUDGET,
    strict_spacing: bool = False,
    verbose: bool = False,
) -> int:
    """Return the burning number by iterative deepening on k.

    For each k a depth-first search places x_1..x_k, keeping only
    candidates that respect the spacing condition, and cuts a branch when
    the largest closed balls still available cannot cover the vertices
    left unburned. Raises BudgetExceededError past `node_budget` states.
    """
    graph.check_not_empty()
    check_connected(graph)
    vertex_count = graph.vertex_count
    upper = metrics(graph).radius + 1
    lower = trivial_lower_bound(graph)
    if lower >= upper:
        return upper

    distances = [_bfs(graph, source)[0] for source in range(vertex_count)]
    balls = [
        [
            sum(1 << other for other in range(vertex_count) if distances[vertex][other] <= radius)
            for radius in range(upper)
        ]
        for vertex in range(vertex_count)
    ]
    ball_sizes = [[bin(ball).count("1") for ball in row] for row in balls]
    largest_ball = [
        max(ball_sizes[vertex][radius] for vertex in range(vertex_count))
        for radius in range(upper)
    ]
    full = (1 << vertex_count) - 1
    expanded = 0

    def search(k: int) -> bool:
        # capacity[i]: most vertices activators i..k can still cover.
        capacity = [0] * (k + 2)
        for position in range(k, 0, -1):
            capacity[position] = capacity[position + 1] + largest_ball[k - position]
        # Largest balls first finds feasible sequences sooner.
        order = [[]] + [
            sorted(range(vertex_count), key=lambda v, r=k - position: (-ball_sizes[v][r], v))
            for position in range(1, k + 1)
        ]

        def extend(position: int, covered: int, chosen: List[int]) -> bool:
            nonlocal expanded
            expanded += 1
            if expanded > node_budget:
                raise BudgetExceededError(expanded, node_budget)
            if covered == full:
                return True
            if position > k:
                return False
            if bin(full & ~covered).count("1") > capacity[position]:
                return False
            for candidate in order[position]:
                spaced = True
                for earlier, activator in enumerate(chosen, start=1):
                    gap = distances[activator][candidate]
                    if gap < position - earlier or (strict_spacing and gap == position - earlier):
                        spaced = False
                        break
                if not spaced:
                    continue
                if extend(position + 1, covered | balls[candidate][k - position], chosen + [candidate]):
                    return True
            return False

        return extend(1, 0, [])

    for k in tqdm(
        range(lower, upper),
        desc="Iterative deepening",
        disable=not verbose,
        leave=False,
        dynamic_ncols=True,
    ):
        if search(k):
            return k
    return upper


def _check_cluster_modulator(graph: Graph, modulator: Iterable[int]) -> List[int]:
    """Return the sorted modulator, raising unless G - A is a disjoint union of cliques."""
    modulator = sorted(set(modulator))
    for vertex in modulator:
        graph.check_vertex(vertex)
    kept = set(range(graph.vertex_count)) - set(modulator)
    rest = graph.to_networkx().subgraph(kept)
    for component in nx.connected_components(rest):
        size = len(component)
        if rest.subgraph(component).number_of_edges() != size * (size - 1) // 2:
            raise NotClusterGraphError(
                f"Component {sorted(component)[:10]} of G - A is not a clique."
            )
    return modulator


def modulator_path_sequence(graph: Graph, path: Sequence[int]) -> BurningSequence:
    """Return the optimal path schedule of a modulator that induces a path.

    `path` lists the modulator vertices in path order.
    """
    path = list(path)
    subgraph, original = graph.induced_subgraph(path)
    index = {vertex: position for position, vertex in enumerate(original)}
    if subgraph.edge_count != len(path) - 1 or not is_simple_path(
        subgraph, [index[vertex] for vertex in path]
    ):
        raise NotAPathError(f"The modulator of {graph.name or ''} does not induce a path.")
    return BurningSequence(
        activators=tuple(path_burning_schedule(path)),
        completion_time=path_burning_completion(len(path)),
    )


def cluster_theorem_check(
    graph: Graph, modulator: Iterable[int], sequence_on_modulator: BurningSequence
) -> bool:
    """Return whether the modulator sequence burns the whole graph within two more rounds.

    The activators are lit in the whole graph and only coverage is
    measured: the completion time in G must not exceed the length on
    G[A] plus 2.
    """
    modulator = _check_cluster_modulator(graph, modulator)
    modulator_set = set(modulator)
    assert all(
        activator in modulator_set for activator in sequence_on_modulator.activators
    ), "The modulator sequence uses vertices outside the modulator."
    burn = _propagate(graph, sequence_on_modulator.activators)
    if UNREACHABLE in burn:
        raise DisconnectedGraphError(
            f"Some clique of {graph.name or ''} is not attached to the modulator."
        )
    return max(burn) <= sequence_on_modulator.completion_time + 2
