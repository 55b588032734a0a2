"""Command line front end: analyze / character / examples.

Input is one JSON document (path or "-" for stdin). Reports are JSON with a
"schema" field; --format text prints a short summary instead.

Exit codes: 0 success, 2 an obstruction fails (report still written),
1 invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import covertorus as ct
from . import lattices as lat
from . import resext
from .localfield import TameFieldModel
from .metadual import (BisectorData, NotFair, NotWeylInvariant, check_weyl_invariant,
                       dual_descriptor, enlarged_dual, fair_default_bisector,
                       metaplectic_data)
from .rootdata import PresetError, RootDatum, preset, preset_name, validate

SCHEMA = 1


class SpecError(ValueError):
    pass


@dataclass
class ProblemSpec:
    group: object
    bisector: object = "fair-default"
    degree: int = 2
    eta: object = "trivial"
    q: int = 5
    sign_convention: str = "savin"
    bruteforce_limit: int = 4096
    raw: dict = field(default_factory=dict)

    def echo(self):
        return {
            "group": self.group,
            "bisector": self.bisector,
            "degree": self.degree,
            "eta": self.eta,
            "field": {"q": self.q},
            "options": {"sign_convention": self.sign_convention,
                        "bruteforce_limit": self.bruteforce_limit},
        }


def _need(doc, key, kind, where):
    if key not in doc:
        raise SpecError(f"{where}: missing field {key!r}")
    v = doc[key]
    if kind is int and (isinstance(v, bool) or not isinstance(v, int)):
        raise SpecError(f"{where}.{key}: expected integer, got {v!r}")
    return v


def parse_spec(doc) -> ProblemSpec:
    if not isinstance(doc, dict):
        raise SpecError("spec: top level must be a JSON object")
    group = _need(doc, "group", None, "spec")
    degree = _need(doc, "degree", int, "spec")
    fld = doc.get("field", {})
    if not isinstance(fld, dict):
        raise SpecError("spec.field: expected object")
    q = fld.get("q", 5)
    if isinstance(q, bool) or not isinstance(q, int):
        raise SpecError(f"spec.field.q: expected integer, got {q!r}")
    opts = doc.get("options", {}) or {}
    sign = opts.get("sign_convention", "savin")
    if sign not in ("savin", "paper7"):
        raise SpecError(f"spec.options.sign_convention: {sign!r} not in savin/paper7")
    limit = opts.get("bruteforce_limit", 4096)
    eta = doc.get("eta", "trivial")
    if eta != "trivial":
        if not isinstance(eta, list) or not all(
                isinstance(e, list) and len(e) == 3 and e[0] == "pi" for e in eta):
            raise SpecError('spec.eta: expected "trivial" or a list of ["pi", k, e]')
    bis = doc.get("bisector", "fair-default")
    if bis != "fair-default" and not (isinstance(bis, list) and all(isinstance(r, list) for r in bis)):
        raise SpecError('spec.bisector: expected "fair-default" or an integer matrix')
    return ProblemSpec(group, bis, degree, eta, q, sign, int(limit), dict(doc))


def build_root_datum(group) -> RootDatum:
    if isinstance(group, str):
        return preset(group)
    if isinstance(group, dict) and "preset" in group:
        return preset(group["preset"], group.get("params"))
    if isinstance(group, dict) and "rank" in group:
        r = int(group["rank"])
        pairs = group.get("pairs", [])
        simple = group.get("simple", list(range(len(pairs))))
        sr = [tuple(pairs[i][0]) for i in simple]
        sc = [tuple(pairs[i][1]) for i in simple]
        for v in sr + sc:
            if len(v) != r:
                raise SpecError("spec.group: vector length differs from rank")
        rd = RootDatum.from_simple(r, sr, sc)
        rep = validate(rd)
        if not rep.ok:
            raise SpecError(f"spec.group: invalid root datum: {rep.violations[0]}")
        return rd
    raise SpecError("spec.group: expected preset name or {rank, pairs, simple}")


class Problem:
    """Resolved spec: root datum, bisector with eta, field model, model."""

    def __init__(self, spec: ProblemSpec):
        self.spec = spec
        try:
            self.rd = build_root_datum(spec.group)
        except PresetError as e:
            raise SpecError(f"spec.group: {e}") from e
        if spec.degree < 1:
            raise SpecError("spec.degree: must be positive")
        try:
            self.field = TameFieldModel(spec.q, spec.degree)
        except ValueError as e:
            raise SpecError(f"spec.field: {e}") from e
        F = self.field
        eta = None
        if spec.eta != "trivial":
            if len(spec.eta) != self.rd.semisimple_rank:
                raise SpecError(f"spec.eta: need {self.rd.semisimple_rank} entries")
            eta = tuple(F.cls(int(k), int(e)) for _, k, e in spec.eta)
        if spec.bisector == "fair-default":
            try:
                self.bis = fair_default_bisector(self.rd, eta=eta)
            except ValueError as e:
                raise SpecError(f"spec.bisector: {e}") from e
        else:
            D = spec.bisector
            if len(D) != self.rd.rank or any(len(r) != self.rd.rank for r in D):
                raise SpecError("spec.bisector: matrix must be rank x rank")
            self.bis = BisectorData(D, eta)
        try:
            check_weyl_invariant(self.rd, self.bis)
        except NotWeylInvariant as e:
            raise SpecError(f"spec.bisector: {e}") from e
        self.md = metaplectic_data(self.rd, self.bis, spec.degree)
        self.model = ct.CoveringTorusModel(self.rd, self.bis, spec.degree, F, self.md)


def _basis(L):
    return [list(v) for v in L.basis]


def _character_block(P: Problem, sign):
    m = P.model
    try:
        chi = ct.distinguished_character(m, sign)
    except ct.ObstructionFails as e:
        return None, {"error": "ObstructionFails", "obstruction": e.obstruction, "witness": e.witness}
    except NotFair as e:
        return None, {"error": "NotFair", "detail": str(e)}
    table = [{"y": row["y"], "a": row["a"], "value": f"zeta_{chi.modulus}^{row['exp']}"}
             for row in chi.table()]
    checks = {
        "genuine": ct.is_genuine_character(m, chi),
        "a_doubleprime": ct.check_a_doubleprime(m, chi)[0],
        "d_prime": ct.check_d_prime(m, chi)[0],
        "weyl_invariant": ct.weyl_fixed(m, chi),
    }
    return chi, {"modulus": chi.modulus, "sign_convention": sign,
                 "basis": [list(y) for y in m.qn_basis], "k": list(m.k),
                 "f": chi.meta.get("f"), "table": table, "checks": checks}


def _oracle_block(P: Problem):
    m = P.model
    limit = P.spec.bruteforce_limit
    out = {}
    try:
        out["center"] = ct.center_bruteforce(m, limit) == ct.predicted_center(m)
    except ct.ModelTooLarge:
        out["center"] = "skipped"
    if m.fair:
        try:
            obs = ct.obstruction_report(m)
            want = ct.torsor_count(P.md) if obs["ob3"]["pass"] else 0
            out["census"] = ct.splitting_census(m, limit) == want
        except ct.ModelTooLarge:
            out["census"] = "skipped"
    return out


def cmd_analyze(spec: ProblemSpec):
    P = Problem(spec)
    md = P.md
    rep = {"schema": SCHEMA, "command": "analyze", "spec": spec.echo()}
    rep["root_datum"] = {"preset": preset_name(P.rd), "rank": P.rd.rank,
                         "simple_roots": [list(a) for a in P.rd.simple_roots],
                         "simple_coroots": [list(a) for a in P.rd.simple_coroots]}
    rep["bisector"] = {"D": [list(r) for r in P.bis.D], "fair": P.model.fair}
    rep["lattices"] = {
        "Y_Qn": _basis(md.Y_Qn),
        "Ysc_Qn": _basis(md.Ysc_Qn),
        "J": _basis(md.J),
        "aligned_basis": [list(y) for y in P.model.qn_basis],
        "aligned_k": list(P.model.k),
        "index_Y_Qn_J": lat.index(md.J, md.Y_Qn),
        "n_alpha_simple": [md.n_alpha[i] for i in P.rd.simple_indices],
        "z_heart_torsion": list(md.z_heart_invariants.torsion),
    }
    rep["dual"] = dual_descriptor(md).as_dict()
    rep["enlarged_dual"] = enlarged_dual(md).as_dict()
    code = 0
    if P.model.fair:
        obs = ct.obstruction_report(P.model)
        rep["obstructions"] = obs
        if not all(v["pass"] for v in obs.values()):
            code = 2
        chi, block = _character_block(P, spec.sign_convention)
        rep["distinguished_character"] = block
        rep["weyl_invariant"] = None if chi is None else block["checks"]["weyl_invariant"]
    else:
        rep["obstructions"] = None
        rep["distinguished_character"] = {"error": "NotFair"}
        rep["weyl_invariant"] = None
    data = resext.residual_data(P.rd, P.bis.eta, P.bis)
    rep["hyperspecial_splitting"] = resext.splits_degree_n(data, spec.degree).as_dict()
    rep["oracle_checks"] = _oracle_block(P)
    return rep, code


def cmd_character(spec: ProblemSpec):
    P = Problem(spec)
    rep = {"schema": SCHEMA, "command": "character", "spec": spec.echo()}
    chi, block = _character_block(P, spec.sign_convention)
    rep["distinguished_character"] = block
    return rep, 0 if chi is not None else 2


def cmd_examples(suite: str, q_values=(5, 7)):
    from . import suites
    if suite == "paper":
        rows = suites.paper_suite()
    elif suite == "oracle":
        rows = suites.oracle_suite(q_values)
    else:
        raise SpecError(f"unknown suite {suite!r} (expected paper or oracle)")
    rows = sorted(rows, key=lambda r: r["id"])
    rep = {"schema": SCHEMA, "command": "examples", "suite": suite, "cases": rows,
           "passed": sum(r["pass"] for r in rows), "total": len(rows)}
    return rep, 0 if all(r["pass"] for r in rows) else 2


def _text(rep):
    lines = [f"schema {rep['schema']} / {rep['command']}"]
    if rep["command"] == "examples":
        for r in rep["cases"]:
            lines.append(f"{'PASS' if r['pass'] else 'FAIL'} {r['id']}")
        lines.append(f"{rep['passed']}/{rep['total']} passed")
        return "\n".join(lines)
    if "dual" in rep:
        d = rep["dual"]
        lines.append(f"dual group: {d['recognized_name'] or d['cartan_str']} "
                     f"(center Z^{d['center_free_rank']} x {d['center_torsion']})")
        lines.append(f"[Y_Qn : J] = {rep['lattices']['index_Y_Qn_J']}")
    if rep.get("obstructions"):
        lines.append("obstructions: " + ", ".join(
            f"{k}={'pass' if v['pass'] else 'fail'}" for k, v in sorted(rep["obstructions"].items())))
    blk = rep.get("distinguished_character")
    if blk and "table" in blk:
        lines.append(f"distinguished character ({blk['sign_convention']}):")
        for row in blk["table"]:
            lines.append(f"  y_{row['y']}({row['a']}) -> {row['value']}")
    elif blk:
        lines.append(f"distinguished character: {blk.get('error')}")
    if "hyperspecial_splitting" in rep:
        lines.append(f"hyperspecial splitting: {rep['hyperspecial_splitting']['verdict']}")
    return "\n".join(lines)


def _load(path):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecError(f"line {e.lineno} column {e.colno}: {e.msg}") from e


def build_parser():
    p = argparse.ArgumentParser(prog="bdmeta", description="Metaplectic dual groups and distinguished characters.")
    sub = p.add_subparsers(dest="cmd", required=True)
    for name in ("analyze", "character"):
        s = sub.add_parser(name)
        s.add_argument("spec", help="JSON spec file, or - for stdin")
    s = sub.add_parser("examples")
    s.add_argument("suite", nargs="?", default="paper")
    for s in sub.choices.values():
        s.add_argument("--out", help="write JSON report here")
        s.add_argument("--format", choices=("text", "json"), default="json")
        s.add_argument("--sign", choices=("paper7", "savin"))
        s.add_argument("--q", type=int)
        s.add_argument("--degree", type=int)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cmd == "examples":
            qs = (args.q,) if args.q else (5, 7)
            rep, code = cmd_examples(args.suite, qs)
        else:
            doc = _load(args.spec)
            if isinstance(doc, dict):
                if args.q is not None:
                    doc = dict(doc, field=dict(doc.get("field", {}), q=args.q))
                if args.degree is not None:
                    doc = dict(doc, degree=args.degree)
                if args.sign is not None:
                    doc = dict(doc, options=dict(doc.get("options", {}) or {}, sign_convention=args.sign))
            spec = parse_spec(doc)
            rep, code = (cmd_analyze if args.cmd == "analyze" else cmd_character)(spec)
    except (SpecError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    payload = json.dumps(rep, sort_keys=True, indent=2)
    if args.out:
        Path(args.out).write_text(payload + "\n")
    print(_text(rep) if args.format == "text" else payload)
    return code


if __name__ == "__main__":
    sys.exit(main())
