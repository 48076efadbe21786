"""JSON encoding of polytopes, GKM graphs and reports.

Numbers are serialized exactly: integers as JSON integers, other rationals
as "p/q" strings.  No floats are ever emitted or accepted.
"""

from fractions import Fraction

from .errors import MalformedInput
from .gkm import GkmGraph
from .polytope import Halfspace, Polytope


def num_to_json(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def num_from_json(x):
    if isinstance(x, bool):
        raise MalformedInput(f"boolean {x!r} is not a number")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError):
            raise MalformedInput(f"cannot parse rational {x!r}")
    raise MalformedInput(f"expected an integer or 'p/q' string, got {x!r}")


def _point_from_json(coords, dim=None):
    if not isinstance(coords, list) or (dim is not None and len(coords) != dim):
        raise MalformedInput(f"bad coordinate list {coords!r}")
    return tuple(num_from_json(c) for c in coords)


def polytope_to_json(P):
    return {
        "dim": P.dim,
        "vertices": [[num_to_json(c) for c in v] for v in P.vertices],
        "facets": [
            {"normal": [int(c) for c in h.normal], "offset": num_to_json(h.offset)}
            for h in P.facets
        ],
    }


def polytope_from_json(data):
    if not isinstance(data, dict) or "dim" not in data:
        raise MalformedInput("polytope JSON must be an object with a 'dim' key")
    dim = data["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise MalformedInput(f"bad dimension {dim!r}")
    if "vertices" in data and data["vertices"]:
        verts = [_point_from_json(v, dim) for v in data["vertices"]]
        P = Polytope.from_vertices(verts)
    elif "facets" in data and data["facets"]:
        halves = []
        for h in data["facets"]:
            if not isinstance(h, dict) or "normal" not in h or "offset" not in h:
                raise MalformedInput(f"bad facet {h!r}")
            halves.append(
                Halfspace.make(_point_from_json(h["normal"], dim), num_from_json(h["offset"]))
            )
        P = Polytope.from_halfspaces(halves)
    else:
        raise MalformedInput("polytope JSON needs 'vertices' or 'facets'")
    if P.dim != dim:
        raise MalformedInput(f"data is {P.dim}-dimensional, declared {dim}")
    return P


def graph_to_json(G):
    out = {
        "ambient_dim": G.ambient_dim,
        "degree": G.degree,
        "vertices": [
            {"id": vid, "coords": [num_to_json(c) for c in G.coords[vid]]}
            for vid in G.ids
        ],
        "edges": [],
    }
    for u, v in G.edges():
        out["edges"].append(
            {
                "u": u,
                "v": v,
                "weight": [int(c) for c in G.weight((u, v))],
                "length": num_to_json(G.length((u, v))),
            }
        )
    return out


def graph_from_json(data):
    if not isinstance(data, dict):
        raise MalformedInput("graph JSON must be an object")
    for key in ("ambient_dim", "degree", "vertices", "edges"):
        if key not in data:
            raise MalformedInput(f"graph JSON missing {key!r}")
    dim = data["ambient_dim"]
    vertices = []
    for v in data["vertices"]:
        if not isinstance(v, dict) or "id" not in v or "coords" not in v:
            raise MalformedInput(f"bad graph vertex {v!r}")
        vertices.append((v["id"], _point_from_json(v["coords"], dim)))
    edges = []
    for e in data["edges"]:
        if not isinstance(e, dict) or "u" not in e or "v" not in e:
            raise MalformedInput(f"bad graph edge {e!r}")
        edges.append((e["u"], e["v"]))
    return GkmGraph(dim, data["degree"], vertices, edges)
