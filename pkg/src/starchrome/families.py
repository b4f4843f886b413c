"""Named graph families with role-labeled vertices and their colorings.

Each builder returns a FamilyInstance whose roles map the family's symbolic
vertex names onto dense ids, and asserts the structural facts the family is
defined by (hub degrees, diameter, 2-connectivity) instead of silently
repairing them.  The closed-form coloring functions and the literal figure
tables are kept apart: formulas live in formula_coloring, figures in
versioned plain-text data files loaded by figure_coloring.  Neither asserts
validity; running the validator is the caller's job.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .coloring import EdgeColoring
from .errors import BadParams, MalformedText, OutOfRange, PostconditionFailed, UnknownFigure
from .graph import Graph, diameter, from_edges, is_two_connected
from .outerplanar import is_polygon_triangulation


@dataclass(frozen=True)
class FamilyInstance:
    family_id: str
    graph: Graph
    roles: dict[str, int]
    params: dict[str, int]

    def vertex(self, role: str) -> int:
        return self.roles[role]

    def edge_color_map(self, role_colors: dict[tuple[str, str], int]) -> EdgeColoring:
        mapping = {}
        for (r1, r2), color in role_colors.items():
            mapping[(self.roles[r1], self.roles[r2])] = color
        return EdgeColoring.from_mapping(self.graph, mapping)


def _check(instance: FamilyInstance, *, degrees: dict[str, int] | None = None,
           diam: int | None = None, two_connected: bool | None = None) -> FamilyInstance:
    g = instance.graph
    if sorted(instance.roles.values()) != list(range(g.n)):
        raise PostconditionFailed(f"{instance.family_id}: roles are not a bijection")
    degs = g.degrees()
    for role, want in (degrees or {}).items():
        got = degs[instance.roles[role]]
        if got != want:
            raise PostconditionFailed(
                f"{instance.family_id}: d({role}) = {got}, declared {want}"
            )
    if diam is not None and diameter(g) != diam:
        raise PostconditionFailed(
            f"{instance.family_id}: diameter {diameter(g)}, declared {diam}"
        )
    if two_connected is not None and is_two_connected(g) != two_connected:
        raise PostconditionFailed(f"{instance.family_id}: 2-connectivity mismatch")
    return instance


# --- small fixed cores -------------------------------------------------

_G61_EDGES = [
    ("v0", "v1"), ("v0", "v2"), ("v0", "v3"), ("v0", "v4"),
    ("v1", "v2"), ("v2", "v5"), ("v3", "v5"), ("v3", "v4"), ("v2", "v3"),
]
_G62_EDGES = [
    ("v0", "v1"), ("v1", "v2"), ("v0", "v2"), ("v0", "v3"), ("v0", "v4"),
    ("v2", "v3"), ("v3", "v4"), ("v3", "v5"), ("v4", "v5"),
]


def _from_role_edges(family_id: str, role_edges, params=None) -> FamilyInstance:
    roles: dict[str, int] = {}
    for r1, r2 in role_edges:
        for r in (r1, r2):
            if r not in roles:
                roles[r] = len(roles)
    g = from_edges(len(roles), [(roles[r1], roles[r2]) for r1, r2 in role_edges])
    return FamilyInstance(family_id, g, roles, params or {})


def _leaf(hub: str, i: int) -> str:
    return f"{hub}^({i})"


def _fan_role_edges(order: int) -> list[tuple[str, str]]:
    edges = [("v0", f"v{i}") for i in range(1, order)]
    edges += [(f"v{i}", f"v{i + 1}") for i in range(1, order - 1)]
    return edges


def _hub_fan_edges(hub: str, count: int) -> list[tuple[str, str]]:
    """Spokes hub-hub^(i) plus the consecutive chain between the leaves."""
    edges = [(hub, _leaf(hub, i)) for i in range(1, count + 1)]
    edges += [(_leaf(hub, i), _leaf(hub, i + 1)) for i in range(1, count)]
    return edges


def _build_path(n: int) -> FamilyInstance:
    if n < 2:
        raise BadParams("path needs n >= 2")
    edges = [(f"v{i}", f"v{i + 1}") for i in range(n - 1)]
    return _from_role_edges("path", edges, {"n": n})


def _build_cycle(n: int) -> FamilyInstance:
    if n < 3:
        raise BadParams("cycle needs n >= 3")
    edges = [(f"v{i}", f"v{(i + 1) % n}") for i in range(n)]
    return _from_role_edges("cycle", edges, {"n": n})


def _build_fan(order: int) -> FamilyInstance:
    if order < 3:
        raise BadParams("fan needs order >= 3 (hub joined to a path on >= 2 vertices)")
    inst = _from_role_edges("fan", _fan_role_edges(order), {"n": order})
    return _check(inst, degrees={"v0": order - 1}, two_connected=True)


def _build_g61() -> FamilyInstance:
    return _check(_from_role_edges("g61", _G61_EDGES), diam=2, two_connected=True)


def _build_g61_prime() -> FamilyInstance:
    edges = [e for e in _G61_EDGES if e not in [("v0", "v2"), ("v0", "v3")]]
    return _check(_from_role_edges("g61_prime", edges), diam=3, two_connected=True)


def _build_g62() -> FamilyInstance:
    return _check(_from_role_edges("g62", _G62_EDGES), diam=3, two_connected=True)


def _build_g_delta(delta: int) -> FamilyInstance:
    """The g61 core plus delta-4 pendant leaves on each of v0, v2, v3."""
    if delta < 5:
        raise BadParams("pendant family needs delta >= 5")
    edges = list(_G61_EDGES)
    for hub in ("v0", "v2", "v3"):
        edges += [(hub, _leaf(hub, i)) for i in range(1, delta - 3)]
    inst = _from_role_edges("g_delta", edges, {"delta": delta})
    return _check(
        inst, degrees={"v0": delta, "v2": delta, "v3": delta}, diam=3,
        two_connected=False,
    )


def _build_h_prime(delta: int) -> FamilyInstance:
    """The pendant family with each hub's leaves chained into a fan.

    The leaf chains run v1..v4 around v0, v1..v5 around v2 and v5..v4
    around v3; chain indices stop at the last existing leaf.
    """
    if delta < 5:
        raise BadParams("h_prime needs delta >= 5")
    k = delta - 4
    edges = list(_G61_EDGES)
    for hub in ("v0", "v2", "v3"):
        edges += _hub_fan_edges(hub, k)
    edges += [("v1", _leaf("v0", 1)), (_leaf("v0", k), "v4")]
    edges += [("v1", _leaf("v2", 1)), (_leaf("v2", k), "v5")]
    edges += [("v5", _leaf("v3", 1)), (_leaf("v3", k), "v4")]
    inst = _from_role_edges("h_prime", edges, {"delta": delta})
    return _check(
        inst, degrees={"v0": delta, "v2": delta, "v3": delta}, diam=3,
        two_connected=True,
    )


def _build_h_case1(delta: int) -> FamilyInstance:
    """The g62 core with fans at v0 (to v1), v3 (to v5) and v4 (from v5)."""
    if delta < 4:
        raise BadParams("h_case1 needs delta >= 4")
    k = delta - 4
    edges = list(_G62_EDGES)
    edges += _hub_fan_edges("v0", k)
    if k:
        edges.append((_leaf("v0", k), "v1"))
    edges += _hub_fan_edges("v3", k)
    if k:
        edges.append((_leaf("v3", k), "v5"))
    edges += _hub_fan_edges("v4", k + 1)
    edges.append(("v5", _leaf("v4", 1)))
    inst = _from_role_edges("h_case1", edges, {"delta": delta})
    return _check(
        inst, degrees={"v0": delta, "v3": delta, "v4": delta}, diam=3,
        two_connected=True,
    )


def _build_h2(delta: int) -> FamilyInstance:
    """Double-apex core with leaf fans at v2 and v3.

    The v2 chain starts at apex v5 and the v3 chain ends at apex v6,
    the orientation the coloring function expects.
    """
    if delta < 4:
        raise BadParams("h2 needs delta >= 4")
    k = delta - 4
    edges = [
        ("v0", "v1"), ("v0", "v2"), ("v0", "v3"), ("v0", "v4"),
        ("v1", "v2"), ("v2", "v3"), ("v3", "v4"),
        ("v1", "v5"), ("v2", "v5"), ("v3", "v6"), ("v4", "v6"),
    ]
    edges += _hub_fan_edges("v2", k)
    edges += _hub_fan_edges("v3", k)
    if k:
        edges.append(("v5", _leaf("v2", 1)))
        edges.append((_leaf("v3", k), "v6"))
    inst = _from_role_edges("h2", edges, {"delta": delta})
    return _check(
        inst, degrees={"v2": delta, "v3": delta}, diam=3, two_connected=True,
    )


# --- the max-degree-5 strip -------------------------------------------

# Six-block period read off the figure; colors 7, 8, 9 stand for the
# figure's a, b, c.  Each block is a hub fanned over a 5-vertex path:
# spokes s1..s5 and path edge colors (p1p2, p2p3, p3p4, p4p5).  A block
# shares its left slots with the previous block's right slots.
_STRIP_PHASES = {
    1: {"left": (1, 2), "right": (3, 4), "spokes": (2, 4, 9, 8, 5), "path": (8, 7, 1, 3)},
    2: {"left": (2, 3), "right": (4, 5), "spokes": (9, 6, 5, 4, 2), "path": (3, 1, 7, 9)},
    3: {"left": (2, 3), "right": (3, 4), "spokes": (6, 8, 3, 1, 9), "path": (5, 9, 5, 4)},
    4: {"left": (1, 2), "right": (3, 4), "spokes": (1, 7, 6, 9, 8), "path": (5, 8, 5, 4)},
    5: {"left": (2, 3), "right": (4, 5), "spokes": (9, 4, 3, 1, 7), "path": (2, 5, 7, 6)},
    0: {"left": (2, 3), "right": (3, 4), "spokes": (5, 4, 9, 3, 6), "path": (8, 6, 8, 5)},
}

STRIP_FIGURE_BLOCKS = 10
STRIP_PERIOD = 6


def _strip_layout(blocks: int):
    """Vertex roles, edges and the periodic coloring of the strip.

    Block t reuses the previous block's right-shared slots for its own
    left-shared slots; everything else is fresh.  Returns role edges with
    their colors so the graph and its 9-coloring come from one pass.
    """
    if blocks < STRIP_FIGURE_BLOCKS or (blocks - STRIP_FIGURE_BLOCKS) % STRIP_PERIOD:
        raise BadParams(
            f"strip needs blocks >= {STRIP_FIGURE_BLOCKS} and congruent to "
            f"{STRIP_FIGURE_BLOCKS} mod {STRIP_PERIOD}, got {blocks}"
        )
    colored_edges: dict[tuple[str, str], int] = {}
    prev_right: tuple[str, str] | None = None
    for t in range(1, blocks + 1):
        phase = _STRIP_PHASES[t % STRIP_PERIOD]
        hub = f"b{t}h"
        slots: list[str | None] = [None] * 6  # 1-based positions
        if prev_right is not None:
            l1, l2 = phase["left"]
            slots[l1], slots[l2] = prev_right
        for pos in range(1, 6):
            if slots[pos] is None:
                slots[pos] = f"b{t}p{pos}"
        for pos in range(1, 6):
            _put(colored_edges, hub, slots[pos], phase["spokes"][pos - 1])
        for pos in range(1, 5):
            _put(colored_edges, slots[pos], slots[pos + 1], phase["path"][pos - 1])
        r1, r2 = phase["right"]
        prev_right = (slots[r1], slots[r2])
    return colored_edges


def _put(table: dict[tuple[str, str], int], r1: str, r2: str, color: int) -> None:
    key = (r1, r2) if r1 < r2 else (r2, r1)
    if key in table and table[key] != color:
        raise PostconditionFailed(
            f"strip period tables disagree on edge {key}: {table[key]} vs {color}"
        )
    table[key] = color


def _build_delta5_strip(blocks: int) -> FamilyInstance:
    colored = _strip_layout(blocks)
    inst = _from_role_edges("delta5_strip", list(colored.keys()), {"blocks": blocks})
    g = inst.graph
    if g.n != 4 * blocks + 2 or g.m != 8 * blocks + 1:
        raise PostconditionFailed("strip size does not match 4b+2 vertices / 8b+1 edges")
    if g.max_degree() != 5:
        raise PostconditionFailed("strip max degree must be exactly 5")
    if not is_polygon_triangulation(g):
        raise PostconditionFailed("strip must be a triangulated polygon")
    return inst


def delta5_strip_coloring(blocks: int) -> EdgeColoring:
    """The figure's periodic star 9-coloring extended to the given size."""
    inst = _build_delta5_strip(blocks)
    return inst.edge_color_map(_strip_layout(blocks))


# --- registry ----------------------------------------------------------

def build_family(family_id: str, **params: int) -> FamilyInstance:
    """Construct a named family instance; see module docstring for ids."""
    try:
        if family_id == "path":
            return _build_path(params.pop("n"))
        if family_id == "cycle":
            return _build_cycle(params.pop("n"))
        if family_id == "fan":
            return _build_fan(params.pop("n"))
        if family_id == "g61":
            return _build_g61()
        if family_id == "g61_prime":
            return _build_g61_prime()
        if family_id == "g62":
            return _build_g62()
        if family_id == "g_delta":
            return _build_g_delta(params.pop("delta"))
        if family_id == "h_prime":
            return _build_h_prime(params.pop("delta"))
        if family_id == "h_case1":
            return _build_h_case1(params.pop("delta"))
        if family_id == "h2":
            return _build_h2(params.pop("delta"))
        if family_id == "delta5_strip":
            return _build_delta5_strip(params.pop("blocks"))
    except KeyError as exc:
        raise BadParams(f"{family_id} is missing parameter {exc}") from None
    raise BadParams(f"unknown family id {family_id!r}")


FAMILY_IDS = (
    "path", "cycle", "fan", "g61", "g61_prime", "g62",
    "g_delta", "h_prime", "h_case1", "h2", "delta5_strip",
)


# --- closed-form coloring functions -------------------------------------

def _h_prime_coloring(delta: int) -> dict[tuple[str, str], int]:
    if delta < 9:
        raise OutOfRange("the h_prime coloring function is stated for delta >= 9")
    d = delta
    c: dict[tuple[str, str], int] = {}
    c[("v0", "v1")] = 1
    c[("v0", "v4")] = d - 2
    c[("v2", "v1")] = 2
    c[("v2", "v5")] = d + 2
    c[("v3", "v5")] = 1
    c[("v3", "v4")] = d + 2
    c[("v0", "v2")] = d
    c[("v0", "v3")] = d - 1
    c[("v2", "v3")] = d + 1
    for l in range(1, d - 3):
        c[("v0", _leaf("v0", l))] = l + 1
        c[("v2", _leaf("v2", l))] = l + 2
        c[("v3", _leaf("v3", l))] = l + 1
    c[("v1", _leaf("v0", 1))] = d + 3
    for m in range(2, d - 4):
        c[(_leaf("v0", m - 1), _leaf("v0", m))] = m + 3
    c[(_leaf("v0", d - 5), _leaf("v0", d - 4))] = d + 1
    c[(_leaf("v0", d - 4), "v4")] = d + 3
    c[("v1", _leaf("v2", 1))] = 5
    for n_ in range(2, d - 4):
        c[(_leaf("v2", n_ - 1), _leaf("v2", n_))] = n_ + 4
    c[(_leaf("v2", d - 5), _leaf("v2", d - 4))] = 2
    c[(_leaf("v2", d - 4), "v5")] = 3
    c[("v5", _leaf("v3", 1))] = 4
    for p in range(2, d - 5):
        c[(_leaf("v3", p - 1), _leaf("v3", p))] = p + 3
    c[(_leaf("v3", d - 6), _leaf("v3", d - 5))] = d + 2
    c[(_leaf("v3", d - 5), _leaf("v3", d - 4))] = d
    c[(_leaf("v3", d - 4), "v4")] = 2
    return c


def _h_case1_coloring(delta: int) -> dict[tuple[str, str], int]:
    if delta < 7:
        raise OutOfRange("the h_case1 coloring function is stated for delta >= 7")
    d = delta
    c: dict[tuple[str, str], int] = {
        ("v0", "v1"): d - 3,
        ("v0", "v2"): d - 2,
        ("v0", "v3"): d + 1,
        ("v0", "v4"): d + 2,
        ("v3", "v5"): d - 1,
        ("v4", "v5"): d + 4,
        ("v1", "v2"): d + 3,
        ("v2", "v3"): d,
        ("v3", "v4"): d + 3,
    }
    for l in range(1, d - 3):
        c[("v0", _leaf("v0", l))] = l
        c[("v3", _leaf("v3", l))] = l + 2
    for p in range(1, d - 2):
        c[("v4", _leaf("v4", p))] = p + 2
    for l in range(1, d - 4):
        c[(_leaf("v0", l), _leaf("v0", l + 1))] = l + 3
        c[(_leaf("v3", l), _leaf("v3", l + 1))] = l
    for p in range(1, d - 3):
        c[(_leaf("v4", p), _leaf("v4", p + 1))] = p
    # terminus at v1 continues the consecutive rule one step (l+3 at l=d-4)
    c[(_leaf("v0", d - 4), "v1")] = d - 1
    c[(_leaf("v3", d - 4), "v5")] = d - 4
    c[("v5", _leaf("v4", 1))] = d
    return c


def _h2_coloring(delta: int) -> dict[tuple[str, str], int]:
    if delta < 10:
        raise OutOfRange("the h2 coloring function is stated for delta >= 10")
    d = delta
    c: dict[tuple[str, str], int] = {
        ("v0", "v1"): d + 2,
        ("v0", "v2"): d - 1,
        ("v0", "v3"): d + 1,
        ("v0", "v4"): 5,
        ("v1", "v2"): d,
        ("v2", "v3"): d - 2,
        ("v3", "v4"): d,
        ("v1", "v5"): d + 1,
        ("v2", "v5"): 1,
        ("v3", "v6"): d - 3,
        ("v4", "v6"): d + 2,
    }
    for l in range(1, d - 3):
        c[("v2", _leaf("v2", l))] = l + 1
        c[("v3", _leaf("v3", l))] = l
    c[("v5", _leaf("v2", 1))] = 4
    for p in range(1, d - 6):
        c[(_leaf("v2", p), _leaf("v2", p + 1))] = p + 4
    c[(_leaf("v2", d - 6), _leaf("v2", d - 5))] = 1
    c[(_leaf("v2", d - 5), _leaf("v2", d - 4))] = 2
    for q in range(1, d - 5):
        c[(_leaf("v3", q), _leaf("v3", q + 1))] = q + 3
    c[(_leaf("v3", d - 5), _leaf("v3", d - 4))] = 1
    # chain terminus: the v3 fan ends at apex v6 (see _build_h2)
    c[(_leaf("v3", d - 4), "v6")] = 2
    return c


_FORMULA_COLORINGS = {
    "h_prime": (_h_prime_coloring, lambda d: d + 3),
    "h_case1": (_h_case1_coloring, lambda d: d + 4),
    "h2": (_h2_coloring, lambda d: d + 2),
}


def formula_coloring(family_id: str, delta: int) -> EdgeColoring:
    """The family's closed-form coloring, index ranges taken literally.

    Claimed palettes: h_prime delta+3 (delta >= 9), h_case1 delta+4
    (delta >= 7), h2 delta+2 (delta >= 10).  Validity is not asserted here.
    """
    if family_id not in _FORMULA_COLORINGS:
        raise OutOfRange(f"no closed-form coloring for family {family_id!r}")
    rule, _ = _FORMULA_COLORINGS[family_id]
    table = rule(delta)
    inst = build_family(family_id, delta=delta)
    return inst.edge_color_map(table)


def claimed_palette(family_id: str, delta: int) -> int:
    _, claim = _FORMULA_COLORINGS[family_id]
    return claim(delta)


# --- figure catalog ------------------------------------------------------

#: figure id -> (family id, params, claimed palette)
FIGURES: dict[str, tuple[str, dict[str, int], int]] = {
    "fig1": ("g61", {}, 6),
    "fig2": ("g61_prime", {}, 4),
    "fig3_f6": ("fan", {"n": 6}, 6),
    "fig3_f7": ("fan", {"n": 7}, 7),
    "fig8a": ("h_prime", {"delta": 5}, 9),
    "fig8b": ("h_prime", {"delta": 6}, 9),
    "fig8c": ("h_prime", {"delta": 7}, 11),
    "fig8d": ("h_prime", {"delta": 8}, 11),
    "fig8e": ("h_prime", {"delta": 9}, 12),
    "fig10a": ("h_case1", {"delta": 4}, 6),
    "fig10b": ("h_case1", {"delta": 5}, 8),
    "fig10c": ("h_case1", {"delta": 6}, 9),
    "fig10d": ("h_case1", {"delta": 7}, 11),
    "fig11a": ("h2", {"delta": 4}, 7),
    "fig11b": ("h2", {"delta": 5}, 8),
    "fig11c": ("h2", {"delta": 6}, 9),
    "fig11d": ("h2", {"delta": 7}, 10),
    "fig11e": ("h2", {"delta": 8}, 11),
    "fig11f": ("h2", {"delta": 9}, 11),
    "fig11g": ("h2", {"delta": 10}, 12),
    "fig12": ("delta5_strip", {"blocks": STRIP_FIGURE_BLOCKS}, 9),
}


def _load_figure_table(figure_id: str) -> dict[tuple[str, str], int]:
    package = resources.files("starchrome").joinpath("data", "figures")
    path = package.joinpath(f"{figure_id}.txt")
    if not path.is_file():
        raise UnknownFigure(f"figure data file {figure_id}.txt is missing")
    table: dict[tuple[str, str], int] = {}
    text = path.read_text()
    lines = text.splitlines()
    if not lines or not lines[0].startswith("# starchrome figure table v1"):
        raise MalformedText(f"{figure_id}.txt lacks the v1 header")
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise MalformedText(f"bad line in {figure_id}.txt: {line!r}")
        r1, r2, color = parts[0], parts[1], int(parts[2])
        table[(r1, r2) if r1 < r2 else (r2, r1)] = color
    return table


def figure_coloring(figure_id: str) -> tuple[FamilyInstance, EdgeColoring]:
    """The literal coloring shipped for one cataloged drawing."""
    if figure_id not in FIGURES:
        raise UnknownFigure(f"unknown figure id {figure_id!r}")
    family_id, params, _ = FIGURES[figure_id]
    inst = build_family(family_id, **params)
    table = _load_figure_table(figure_id)
    return inst, inst.edge_color_map(table)
