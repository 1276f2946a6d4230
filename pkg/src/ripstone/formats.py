"""Plain-text grammars for complexes, chains, matchings, and patterns.

All four formats are line-oriented and diff-friendly: `#` starts a comment,
blank lines are ignored, vertices are non-negative integers.

complex   one simplex per line as strictly ascending integers; the complex
          is the downward closure of the listed faces
chain     `coeff: v1 v2 ...` with a nonzero integer coefficient per line
matching  `v1 v2 ... -> w1 w2 ...` pairing a facet with a cofacet
pattern   header `pattern <n>`, then edge lines `u v` and the directives
          `colored:`, `face:`, `oriented: u v`
"""

from __future__ import annotations

from .errors import FormatError
from .homology import Chain, make_chain
from .morse import Matching, matching_from_pairs
from .patterns import PatternGraph, pattern_graph
from .simplicial import Complex, Simplex, from_faces, maximal_simplices


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError("not an integer", line=lineno, token=tok) from None


def _parse_simplex(text: str, lineno: int) -> Simplex:
    toks = text.split()
    if not toks:
        raise FormatError("empty simplex", line=lineno, token=text.strip() or "''")
    verts = [_parse_int(t, lineno) for t in toks]
    for v in verts:
        if v < 0:
            raise FormatError("negative vertex", line=lineno, token=str(v))
    for a, b in zip(verts, verts[1:]):
        if a >= b:
            raise FormatError(
                "vertices must strictly ascend", line=lineno, token=str(b)
            )
    return tuple(verts)


def parse_complex(text: str) -> Complex:
    faces = []
    for lineno, body in _content_lines(text):
        faces.append(_parse_simplex(body, lineno))
    if not faces:
        raise FormatError("complex file lists no faces", line=1)
    return from_faces(faces)


def serialize_complex(c: Complex) -> str:
    lines = ["# maximal faces, one per line, vertices ascending"]
    lines.extend(" ".join(str(v) for v in s) for s in maximal_simplices(c))
    return "\n".join(lines) + "\n"


def parse_simplex_list(text: str) -> list:
    """Simplices one per line, kept in file order, duplicates collapsed."""
    out = []
    seen = set()
    for lineno, body in _content_lines(text):
        s = _parse_simplex(body, lineno)
        if s not in seen:
            seen.add(s)
            out.append(s)
    return out


def serialize_simplex_list(faces) -> str:
    lines = [" ".join(str(v) for v in s) for s in faces]
    return "\n".join(lines) + "\n" if lines else ""


def parse_chain(text: str) -> Chain:
    terms: dict = {}
    dim = None
    for lineno, body in _content_lines(text):
        head, sep, tail = body.partition(":")
        if not sep:
            raise FormatError("missing ':'", line=lineno, token=body)
        coeff = _parse_int(head.strip(), lineno)
        if coeff == 0:
            raise FormatError("zero coefficient", line=lineno, token=head.strip())
        s = _parse_simplex(tail, lineno)
        if dim is None:
            dim = len(s) - 1
        elif len(s) - 1 != dim:
            raise FormatError(
                f"simplex dimension {len(s) - 1} differs from {dim}",
                line=lineno,
                token=tail.strip(),
            )
        if s in terms:
            raise FormatError("duplicate simplex", line=lineno, token=tail.strip())
        terms[s] = coeff
    if dim is None:
        raise FormatError("chain file has no terms", line=1)
    return make_chain(dim, terms)


def serialize_chain(z: Chain) -> str:
    if z.is_zero():
        return f"# zero chain of dimension {z.dimension}\n"
    lines = [
        f"{z.terms[s]}: " + " ".join(str(v) for v in s) for s in sorted(z.terms)
    ]
    return "\n".join(lines) + "\n"


def parse_matching(text: str) -> Matching:
    pairs = []
    for lineno, body in _content_lines(text):
        left, sep, right = body.partition("->")
        if not sep:
            raise FormatError("missing '->'", line=lineno, token=body)
        if "->" in right:
            raise FormatError("more than one '->'", line=lineno, token=body)
        if not left.strip() or not right.strip():
            raise FormatError("orphan simplex in pair", line=lineno, token=body)
        lo = _parse_simplex(left, lineno)
        up = _parse_simplex(right, lineno)
        if len(up) != len(lo) + 1 or not set(lo) < set(up):
            raise FormatError(
                "left side must be a facet of the right side",
                line=lineno,
                token=body,
            )
        pairs.append((lo, up))
    return matching_from_pairs(pairs)


def serialize_matching(m: Matching) -> str:
    lines = ["# matched pairs, facet -> cofacet"]
    for lo, up in m.pairs:
        lines.append(
            " ".join(str(v) for v in lo) + " -> " + " ".join(str(v) for v in up)
        )
    return "\n".join(lines) + "\n"


def parse_pattern(text: str) -> PatternGraph:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("pattern file is empty", line=1)
    lineno, header = lines[0]
    toks = header.split()
    if len(toks) != 2 or toks[0] != "pattern":
        raise FormatError("expected header 'pattern <n>'", line=lineno, token=header)
    size = _parse_int(toks[1], lineno)
    edges = []
    directives: dict = {}
    for lineno, body in lines[1:]:
        head, sep, tail = body.partition(":")
        if sep:
            key = head.strip()
            if key not in ("colored", "face", "oriented"):
                raise FormatError("unknown directive", line=lineno, token=key)
            if key in directives:
                raise FormatError("repeated directive", line=lineno, token=key)
            vals = [_parse_int(t, lineno) for t in tail.split()]
            if key == "oriented" and len(vals) != 2:
                raise FormatError(
                    "oriented directive needs exactly two vertices",
                    line=lineno,
                    token=tail.strip(),
                )
            if not vals:
                raise FormatError("empty directive", line=lineno, token=key)
            directives[key] = vals
        else:
            toks = body.split()
            if len(toks) != 2:
                raise FormatError(
                    "edge line needs exactly two vertices", line=lineno, token=body
                )
            edges.append((_parse_int(toks[0], lineno), _parse_int(toks[1], lineno)))
    if "colored" not in directives:
        raise FormatError("pattern file has no colored set", line=lines[0][0])
    return pattern_graph(
        size,
        edges,
        directives["colored"],
        face=directives.get("face"),
        oriented_edge=None if "oriented" not in directives else tuple(directives["oriented"]),
    )


def serialize_pattern(p: PatternGraph) -> str:
    lines = [f"pattern {p.size}"]
    lines.extend(f"{u} {v}" for u, v in p.edges)
    lines.append("colored: " + " ".join(str(v) for v in p.colored))
    if p.face is not None:
        lines.append("face: " + " ".join(str(v) for v in p.face))
    if p.oriented_edge is not None:
        lines.append("oriented: " + " ".join(str(v) for v in p.oriented_edge))
    return "\n".join(lines) + "\n"
