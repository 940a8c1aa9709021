#!/usr/bin/env python3
# Copyright 2026 The nodalres Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the catalog/*.json files. Stdlib only; rerun after editing."""

import itertools
import json
import pathlib
import sys

OUT = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).parent.parent / "catalog")

ZETA5 = [1, 1, 1, 1, 1]   # x^4 + x^3 + x^2 + x + 1
OMEGA = [1, 1, 1]         # x^2 + x + 1
GAUSS = [1, 0, 1]         # x^2 + 1


def elt(minpoly, coeffs):
    """Number-field element on the power basis; plain rational if coeffs = [q]."""
    if minpoly is None:
        return str(coeffs[0])
    k = len(minpoly) - 1
    c = list(coeffs) + [0] * (k - len(coeffs))
    return {"minpoly": minpoly, "coeffs": [str(x) for x in c]}


def poly(nvars, terms):
    return {"nvars": nvars, "terms": [{"exp": list(e), "coeff": str(c)} for e, c in terms]}


def exp(nvars, **powers):
    e = [0] * nvars
    for k, v in powers.items():
        e[int(k[1:])] = v
    return e


def expect(value, tag="published", **meta):
    d = {"value": value, "tag": tag}
    d.update(meta)
    return d


def entry(name, kind, provenance, payload, expected, description=""):
    e = {"schema_version": 1, "name": name, "kind": kind, "provenance": provenance}
    if description:
        e["description"] = description
    e["payload"] = payload
    e["expected"] = expected
    return e


def write(e):
    (OUT / (e["name"] + ".json")).write_text(json.dumps(e, indent=1, ensure_ascii=False) + "\n")


def chmutov(name, kind, n, signs, constant, expected, provenance, description=""):
    write(entry(name, "variety", provenance,
                {"generator": "chmutov", "kind": kind, "degree": n, "signs": signs, "constant": constant},
                expected, description))


def vec(s, plus=(), minus=()):
    v = [0] * s
    for i in plus:
        v[i] += 1
    for i in minus:
        v[i] -= 1
    return v


def relation_set(name, labels, pairs, extra, variety, expected, provenance, description=""):
    idx = {l: i for i, l in enumerate(labels)}
    s = len(labels)
    rel = [vec(s, [idx[a]], [idx[b]]) for a, b in pairs]
    for plus, minus in extra:
        rel.append(vec(s, [idx[x] for x in plus], [idx[x] for x in minus]))
    payload = {"s": s, "labels": labels, "relations": [[str(x) for x in r] for r in rel]}
    if variety:
        payload["variety"] = variety
    write(entry(name, "relation-set", provenance, payload, expected, description))


def matrix(name, rows, labels, expected, provenance, relations=None, description=""):
    payload = {"s": len(rows[0]), "labels": labels, "rows": [[str(x) for x in r] for r in rows]}
    if relations:
        payload["relations"] = [[str(x) for x in r] for r in relations]
    write(entry(name, "intersection-matrix", provenance, payload, expected, description))


def main():
    OUT.mkdir(parents=True, exist_ok=True)

    # Quadric cone in P4 with its vertex.
    write(entry("quadric-node", "variety", "worked example: quadric with one node",
                {"kind": "hypersurface-P4", "degree": 2, "field": None,
                 "defining": poly(5, [(exp(5, x1=2), 1), (exp(5, x2=2), 1), (exp(5, x3=2), 1), (exp(5, x4=2), 1)]),
                 "nodes": [["1", "0", "0", "0", "0"]], "labels": ["P"]},
                {"node_count": expect(1), "defect": expect(1)}))

    # Chmutov cubic and its relations.
    chmutov("chmutov-cubic", "hypersurface-P4", 3, [1, 1, 1, 1], 0,
            {"node_count": expect(6), "defect": expect(2), "defect_modular": expect(2, "computed", prime=181)},
            "worked example: Chmutov cubic in P4")
    relation_set("chmutov-cubic-relations", ["++--", "+-+-", "+--+", "-++-", "-+-+", "--++"],
                 [("++--", "--++"), ("+-+-", "-+-+"), ("+--+", "-++-")],
                 [(["++--"], ["+-+-", "+--+"])], "chmutov-cubic",
                 {"rank": expect(2), "relations_rank": expect(4, "computed"),
                  "projective_count": expect(6), "total": expect(64, "computed")},
                 "worked example: relations between exceptional curves of the Chmutov cubic")

    # Quartic double solids.
    ds4 = [([1, 1, 1], 1, 12, 3), ([1, 1, -1], 1, 12, 3), ([1, -1, -1], 1, 9, 1), ([1, 1, 1], -1, 6, 0)]
    for i, (signs, c, s, d) in enumerate(ds4, 1):
        chmutov(f"chmutov-ds4-case{i}", "double-solid-P3", 4, signs, c,
                {"node_count": expect(s), "defect": expect(d), "defect_modular": expect(d, "computed", prime=181)},
                f"worked example: double solid over a Chmutov quartic, case {i}")
    case1 = ["+0+", "-0-", "+0-", "-0+", "++0", "--0", "+-0", "-+0", "0++", "0--", "0+-", "0-+"]
    relation_set("chmutov-ds4-case1-relations", case1,
                 [("+0+", "-0-"), ("+0-", "-0+"), ("++0", "--0"), ("+-0", "-+0"), ("0++", "0--"), ("0+-", "0-+")],
                 [(["+0+", "-+0"], ["0++"]), (["+0+"], ["0+-", "++0"]), (["+0-", "++0"], ["0++"])],
                 "chmutov-ds4-case1",
                 {"rank": expect(3), "projective_count": expect(24), "total": expect(4096, "computed")},
                 "worked example: relations for double solid case 1")
    case2 = ["+++", "---", "+-+", "-+-", "+--", "-++", "++-", "--+", "+00", "-00", "0+0", "0-0"]
    relation_set("chmutov-ds4-case2-relations", case2,
                 [("+++", "---"), ("+-+", "-+-"), ("+--", "-++"), ("++-", "--+"), ("+00", "-00"), ("0+0", "0-0")],
                 [(["+++"], ["+-+", "+00"]), (["+++"], ["0+0", "+--"]), (["+-+"], ["0+0", "++-"])],
                 "chmutov-ds4-case2",
                 {"rank": expect(3), "projective_count": expect(24), "total": expect(4096, "computed")},
                 "worked example: relations for double solid case 2")

    # Chmutov quartics in P4.
    chmutov("chmutov-quartic-p4-pppp", "hypersurface-P4", 4, [1, 1, 1, 1], 0,
            {"node_count": expect(24), "defect": expect(2), "defect_modular": expect(2, prime=181)},
            "worked example: Chmutov quartic T4+T4+T4+T4")
    chmutov("chmutov-quartic-p4-ppmm", "hypersurface-P4", 4, [1, 1, -1, -1], 0,
            {"node_count": expect(33), "defect": expect(7), "defect_modular": expect(7, prime=181)},
            "worked example: Chmutov quartic T4+T4-T4-T4")
    chmutov("chmutov-quartic-p4-pppm", "hypersurface-P4", 4, [1, 1, 1, -1], 0,
            {"node_count": expect(30),
             "defect": expect(5, "computed", published_value=8,
                              note="exact rank of the 30 x 35 evaluation matrix is 25"),
             "defect_modular": expect(5, "computed", prime=181, published_value=8)},
            "worked example: Chmutov quartic T4+T4+T4-T4",
            "The published defect for this quartic is 8; exact and modular computation both give 5.")
    types = {"I": [], "II": [], "III": []}
    for t in itertools.product("+0-", repeat=4):
        zeros = tuple(i for i, ch in enumerate(t) if ch == "0")
        if len(zeros) != 2:
            continue
        key = {(1, 3): "I", (0, 2): "I", (1, 2): "II", (0, 3): "II", (2, 3): "III", (0, 1): "III"}[zeros]
        types[key].append("".join(t))
    labels = types["I"] + types["II"] + types["III"]
    pairs = [(types[k][0], x) for k in types for x in types[k][1:]]
    relation_set("chmutov-quartic-p4-pppp-relations", labels, pairs,
                 [([types["I"][0], types["III"][0]], [types["II"][0]])], "chmutov-quartic-p4-pppp",
                 {"rank": expect(2), "relations_rank": expect(22, "computed")},
                 "worked example: relations for the 24-node Chmutov quartic",
                 "Curves over nodes of one type are homologous. The published count of 6 projective "
                 "small resolutions needs 2^23 flip tests and is not rerun by the golden suite.")

    # Chmutov quintic.
    chmutov("chmutov-quintic", "hypersurface-P4", 5, [1, 1, 1, 1], 0,
            {"node_count": expect(96), "defect": expect(10), "defect_modular": expect(10, prime=173),
             "betti": expect({"b2": 11, "b3": 32, "e": -8, "h11": 11, "h21": 15})},
            "worked example: Chmutov quintic in P4")

    # Sextic and octic double solids.
    table = [
        (6, [1, 1, 1], 1, 54, 6), (6, [1, 1, 1], -1, 36, 0), (6, [1, 1, -1], 1, 51, 5), (6, [1, -1, -1], 1, 44, 2),
        (8, [1, 1, 1], 1, 144, 9), (8, [1, 1, 1], -1, 108, 0), (8, [1, 1, -1], 1, 136, 7), (8, [1, -1, -1], 1, 123, 3),
    ]
    for n, signs, c, s, d in table:
        tag = "".join("p" if x > 0 else "m" for x in signs) + ("p1" if c > 0 else "m1")
        prime = 181 if n == 8 else 173
        exp_ = {"node_count": expect(s), "defect": expect(d), "defect_modular": expect(d, "computed", prime=prime)}
        if s == 144:
            exp_["betti"] = expect({"b2": 10, "b3": 30, "e": -8, "h11": 10, "h21": 14})
        chmutov(f"chmutov-ds{n}-{tag}", "double-solid-P3", n, signs, c, exp_,
                f"defect table: double solids over Chmutov surfaces of degree {n}")

    # Schoen quintic: orbit of (1:1:1:1:1) under diagonal fifth roots of unity.
    def zeta_pow(k):
        k %= 5
        if k == 4:
            return elt(ZETA5, [-1, -1, -1, -1])
        c = [0, 0, 0, 0]
        c[k] = 1
        return elt(ZETA5, c)
    nodes, labels = [], []
    for a in itertools.product(range(5), repeat=3):
        a4 = (-sum(a)) % 5
        nodes.append([zeta_pow(0)] + [zeta_pow(x) for x in (*a, a4)])
        labels.append("".join(str(x) for x in (*a, a4)))
    terms = [(exp(5, **{f"x{i}": 5}), 1) for i in range(5)] + [([1, 1, 1, 1, 1], -5)]
    write(entry("schoen-quintic", "variety", "further examples: quintic with 125 nodes",
                {"kind": "hypersurface-P4", "degree": 5, "field": ZETA5, "defining": poly(5, terms),
                 "nodes": nodes, "labels": labels},
                {"node_count": expect(125), "defect": expect(24)},
                "Sum of fifth powers minus five times the product; nodes (1 : z^a1 : ... : z^a4), sum a = 0 mod 5."))

    # Quartic with 45 nodes over Q(omega).
    def omega_pow(k, sign=1):
        k %= 3
        c = [[1, 0], [0, 1], [-1, -1]][k]
        return elt(OMEGA, [sign * x for x in c])
    zero, one = elt(OMEGA, [0]), elt(OMEGA, [1])
    nodes, labels = [], []
    for b in itertools.product(range(3), repeat=3):
        b4 = (-sum(b)) % 3
        nodes.append([one] + [omega_pow(x) for x in (*b, b4)])
        labels.append("w" + "".join(str(x) for x in (*b, b4)))
    for i, j in itertools.combinations(range(1, 5), 2):
        for a in range(3):
            p = [zero] * 5
            p[i] = one
            p[j] = omega_pow(a, -1)
            nodes.append(p)
            labels.append(f"e{i}{j}.{a}")
    terms = [(exp(5, x0=4), 1)] + [(exp(5, x0=1, **{f"x{i}": 3}), -1) for i in range(1, 5)] + [([0, 1, 1, 1, 1], 3)]
    write(entry("todd-quartic", "variety", "further examples: quartic in P4 with 45 nodes",
                {"kind": "hypersurface-P4", "degree": 4, "field": OMEGA, "defining": poly(5, terms),
                 "nodes": nodes, "labels": labels},
                {"node_count": expect(45), "defect": expect(TODD_DEFECT, "computed")},
                "x0^4 - x0 (x1^3 + x2^3 + x3^3 + x4^3) + 3 x1 x2 x3 x4; no published defect."))

    # Double solid over x0 x1 x2 x3 + F^2, F = (x0^2 + ... + x3^2) / 4.
    nodes, labels = [], []
    ii = lambda s: elt(GAUSS, [0, s])
    re = lambda q: elt(GAUSS, [q])
    for i, j in itertools.combinations(range(4), 2):
        for sgn in (1, -1):
            p = [re(0)] * 4
            p[i] = re(1)
            p[j] = ii(sgn)
            nodes.append(p)
            labels.append(f"L{i}{j}{'+' if sgn > 0 else '-'}")
    for i in range(4):
        nodes.append([re(-1 if k == i else 1) for k in range(4)])
        labels.append(f"T{i}")
    # (sum x^2)^2 / 16 + x0 x1 x2 x3
    terms = {}
    for a in range(4):
        for b in range(4):
            e = [0] * 4
            e[a] += 2
            e[b] += 2
            terms[tuple(e)] = terms.get(tuple(e), 0) + 1
    from fractions import Fraction
    t = [(list(e), Fraction(c, 16)) for e, c in terms.items()] + [([1, 1, 1, 1], 1)]
    write(entry("kummer-F-quarter-sum", "variety", "further examples: quartic double solid with 16 nodes",
                {"kind": "double-solid-P3", "degree": 4, "field": GAUSS, "defining": poly(4, t),
                 "nodes": nodes, "labels": labels},
                {"node_count": expect(16), "defect": expect(6)},
                "Branch surface x0 x1 x2 x3 + F^2 with F = (x0^2 + x1^2 + x2^2 + x3^2) / 4."))

    # Same construction with only the 12 edge nodes: relations of the curves.
    edge = [f"L{i}{j}{s}" for i, j in itertools.combinations(range(4), 2) for s in "ab"]
    relation_set("kummer-tetra-s12-relations", edge,
                 [(f"L{i}{j}a", f"L{i}{j}b") for i, j in itertools.combinations(range(4), 2)],
                 [(["L01a", "L12a"], ["L02a"]), (["L02a", "L23a"], ["L03a"]), (["L01a", "L13a"], ["L03a"])],
                 None, {"rank": expect(3), "projective_count": expect(24), "total": expect(4096, "computed")},
                 "further examples: quartic double solid q^2 + x0 x1 x2 x3 with 12 nodes")

    # Kummer surface: 6 tropes through P1 against the 16 exceptional curves.
    kl = ["L1"] + [f"L{i}{j}" for i, j in itertools.combinations(range(1, 7), 2)]
    krows = [
        [1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [-1, -1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
        [1, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1, 1, 1, 0, 0, 0],
        [-1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1, 0, 0, 1, 1, 0],
        [1, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 1, 0, -1, 0, 1],
        [-1, 0, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1, 0, 1, 1],
    ]
    matrix("kummer-16", krows, kl,
           {"rank": expect(6), "nullhomologous_columns": expect([], "computed"),
            "projective_count": expect(KUMMER_COUNT, "computed"), "total": expect(65536, "computed")},
           "further examples: Kummer surface, tropes through one node")

    # Cubic with d = 4 and 9 nodes.
    crows = [
        [1, 1, 0, 1, 0, 0, 1, 0, 0],
        [1, 0, 1, 0, 1, 1, 0, 0, 0],
        [-1, 0, 0, -1, -1, 0, 0, 0, -1],
        [-1, -1, -1, 0, 0, 0, 0, -1, 0],
        [0, 0, 0, 0, 0, -1, -1, 1, 1],
    ]
    cb = [vec(9, [0], [1, 4]), vec(9, [0], [2, 3]), vec(9, [1], [6, 7]), vec(9, [3], [6, 8]), vec(9, [2], [5, 7])]
    matrix("cubic-d4-matrix", crows, [f"P{i}" for i in range(1, 10)],
           {"rank": expect(4, "computed", note="the five rows sum to zero"),
            "relations_rank": expect(5, "computed"),
            "projective_count": expect(102), "total": expect(512, "computed")},
           "cubic with nine nodes, associated curve of type d = 4", relations=cb)

    # Complete intersection of quadrics with six nodes.
    qrows = [[1, 1, 0, 0, 0, 0], [0, 0, 1, 1, 0, 0], [0, 0, 0, 0, 1, 1], [1, 0, 1, 0, 1, 0]]
    matrix("ci-quadrics-s6", qrows, [f"P{i}" for i in range(1, 7)],
           {"rank": expect(4), "projective_count": expect(46), "total": expect(64)},
           "complete intersection of quadrics with six nodes",
           relations=[[1, -1, -1, 1, 0, 0], [1, -1, 0, 0, -1, 1]])

    # Nine divisors against nine of the 144 nodes of the octic double solid.
    orows = [
        [1, 0, 1, 1, 0, 1, 1, 0, 0],
        [-1, 0, -1, -1, 0, 0, 0, 1, 1],
        [0, 1, 0, 0, 1, -1, -1, 0, -1],
        [0, 0, 0, -1, 0, 0, -1, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, -1, 0, 1, 0, 0],
        [-1, 0, 1, 0, 0, -1, 0, -1, 0],
        [1, 0, -1, 0, 0, 0, 0, 0, 1],
        [0, -1, 0, 0, 0, 1, 0, 1, 0],
    ]
    matrix("octic-9x9-block", orows, [f"P{i}" for i in range(1, 10)], {"rank": expect(9)},
           "octic double solid with 144 nodes: nine divisors at nine nodes")

    # Node-count bounds.
    up = [1, 4, 16, 31, 66, 104, 174, 256, 360, 488, 645]
    corrected = {9: 246, 11: 480}
    low = [1, 4, 16, 31, 65, 90, 160, 192, 300, 375, 540]
    src = {2: "", 3: "", 4: "Kummer", 5: "Beauville", 6: "Jaffe-Ruberman", 7: "Stagnaro", 8: "Kreiss"}
    rows = []
    for i, d in enumerate(range(2, 13)):
        r = {"d": d, "upper_published": up[i]}
        if d in corrected:
            r["upper_corrected"] = corrected[d]
        r["lower"] = low[i]
        if d == 6:
            r["lower_published"] = 66
            r["note"] = "table lower bound 66 (Stagnaro) later corrected; 65 is a known lower bound"
        if src.get(d):
            r["lower_source"] = src[d]
        rows.append(r)
    write(entry("mu3-bounds", "bounds-datum", "node-count bounds for surfaces in P3, 2 <= d <= 12",
                {"n": 3, "rows": rows},
                {"combined_upper": expect([1, 4, 16, 31, 66, 104, 174, 246, 360, 480, 645], d=[2, 12])}))
    write(entry("mu4-bounds", "bounds-datum", "node-count bounds for hypersurfaces in P4, 2 <= d <= 5",
                {"n": 4, "rows": [
                    {"d": 2, "lower": 1, "lower_source": "quadric cone"},
                    {"d": 3, "lower": 10, "lower_source": "Segre cubic"},
                    {"d": 4, "lower": 45, "lower_source": "quartic with 45 nodes"},
                    {"d": 5, "lower": 126, "lower_source": "Hirzebruch"}]},
                {"arnold": expect([1, 10, 45, 135], d=[2, 5]), "bruce": expect([1, 11, 51, 154], d=[2, 5]),
                 "combined_upper": expect([1, 10, 45, 135], d=[2, 5])}))


KUMMER_COUNT = 3356
TODD_DEFECT = 15

if __name__ == "__main__":
    main()
