"""Command-line interface: datum validation, module construction and
serialization, structural analysis, almost-split-sequence checks, and the
classification-enumeration harness.

Determinism contract: with a fixed --seed (and any --jobs), stdout is
byte-identical across runs for identical inputs.  Timing statistics go to
stderr only.  Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .cyclo import CycScalar
from .datum import DatumError, ValidatedDatum, Weight, datum_from_json
from .linalg import Mat, frobenius_pair, rank
from .repmod import ModuleRep, direct_sum
from . import constructors, homology


EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INVALID = 2

CLI_FAMILIES = ("verma", "simple", "projective", "t1", "t1bar", "string_tt",
                "string_ttbar", "band_m1", "band_mt", "w1", "w_t", "omega_power")

OUTSIDE = "outside classified grid or bounds"


# ---------------------------------------------------------------------------
# input parsing helpers


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise DatumError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DatumError(f"{path} is not valid JSON: {exc}") from exc


def _load_datum(path: str) -> ValidatedDatum:
    return datum_from_json(_load_json(path))


def _load_module(path: str) -> ModuleRep:
    return ModuleRep.from_json(_load_json(path))


def parse_weight(datum: ValidatedDatum, text: str) -> Weight:
    """Accept either weight JSON ({"gpart": [...], "h": [...]}) or the
    compact form 'g1,g2;h1,h2'."""
    text = text.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DatumError(f"bad weight JSON: {exc}") from exc
        return Weight.from_json(datum.group, obj)
    body = text.strip("()")
    if ";" not in body:
        raise DatumError("compact weight form is 'g1,g2,...;h1,h2,...'")
    gtxt, htxt = body.split(";", 1)

    def ints(part: str) -> tuple[int, ...]:
        part = part.strip()
        if not part:
            return ()
        try:
            return tuple(int(v) for v in part.split(","))
        except ValueError as exc:
            raise DatumError(f"bad weight component {part!r}") from exc

    g, h = ints(gtxt), ints(htxt)
    if len(g) != datum.group.rank or len(h) != datum.group.rank:
        raise DatumError(f"weight needs {datum.group.rank} exponent(s) per part")
    return Weight(datum.group, g, h)


def parse_etas(text: str) -> list[constructors.EtaParam]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok:
            out.append(constructors.EtaParam.parse(tok))
    if not out:
        raise DatumError("empty eta list")
    return out


# ---------------------------------------------------------------------------
# output helpers


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _factor_str(factors: list[dict]) -> str:
    return " + ".join(f"{f['mult']}*V({f['l']},{f['lambda']})" for f in factors) or "0"


# ---------------------------------------------------------------------------
# datum / weights commands


def cmd_datum_check(args) -> int:
    datum = _load_datum(args.file)
    counts = datum.simple_counts()
    k = len(datum.kernel_K())
    payload = {
        "kind": datum.kind,
        "orders": list(datum.group.orders),
        "exponent": datum.N,
        "rho": str(datum.rho),
        "n": datum.n,
        "m": datum.m,
        "alpha": str(datum.alpha),
        "alpha_normalized": datum.alpha_normalized,
        "K": k,
        "simple_counts": {str(l): c for l, c in sorted(counts.items())},
    }
    lines = [
        f"kind: {datum.kind}",
        f"group orders: {list(datum.group.orders)} (exponent {datum.N})",
        f"rho = {datum.rho}, n = {datum.n}, m = {datum.m}",
        f"alpha = {datum.alpha}" + (" (normalized)" if datum.alpha_normalized else ""),
        f"|K| = {k}",
        "simple counts by dimension: "
        + ", ".join(f"{l}: {c}" for l, c in sorted(counts.items())),
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_weights_list(args) -> int:
    datum = _load_datum(args.file)
    classes: dict[str, list[dict]] = {}
    lines = []
    for l in range(1, datum.n + 1):
        ws = datum.weights_in_class(l)
        rows = []
        for w in ws:
            cls = datum.classify_weight(w)
            rows.append({"label": w.label(), "gpart": list(w.gexps),
                         "h": list(w.hexps), "branch": cls.branch})
        classes[str(l)] = rows
        lines.append(f"I_{l} ({len(ws)}): " + " ".join(w.label() for w in ws))
    payload = {"n": datum.n, "total": datum.group.size ** 2, "classes": classes}
    lines.append(f"total weights: {datum.group.size ** 2}")
    _emit(args, payload, lines)
    return EXIT_OK


# ---------------------------------------------------------------------------
# module commands


def cmd_module_build(args) -> int:
    datum = _load_datum(args.file)
    if args.family not in CLI_FAMILIES:
        raise DatumError(f"unknown family {args.family!r}; "
                         f"expected one of {', '.join(CLI_FAMILIES)}")
    lam = parse_weight(datum, args.lam) if args.lam is not None else None
    eta = constructors.EtaParam.parse(args.eta) if args.eta is not None else None
    if args.family == "omega_power":
        if lam is None or args.l is None:
            raise DatumError("omega_power needs --l and --lambda")
        mod = homology.omega_power(datum, args.l, lam, args.s)
    else:
        mod = constructors.build_family(datum, args.family, l=args.l, lam=lam,
                                        t=args.t, eta=eta, basis=args.basis)
    doc = json.dumps(mod.to_json(), indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(doc + "\n")
        print(f"wrote {args.out} (dim {mod.dim})")
    else:
        print(doc)
    return EXIT_OK


def cmd_module_verify(args) -> int:
    mod = _load_module(args.file)
    report = mod.verify_relations()
    payload = {
        "ok": report.ok,
        "dim": mod.dim,
        "checks": [{"name": c.name, "ok": c.ok,
                    **({"detail": c.detail} if c.detail else {})}
                   for c in report.checks],
    }
    lines = [f"dim: {mod.dim}",
             f"relations: {'all hold' if report.ok else 'FAILED'} "
             f"({sum(1 for c in report.checks if c.ok)}/{len(report.checks)} checks)"]
    for c in report.failures():
        lines.append(f"  FAIL {c.name}" + (f": {c.detail}" if c.detail else ""))
    _emit(args, payload, lines)
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_module_analyze(args) -> int:
    mod = _load_module(args.file)
    report = mod.verify_relations()
    if not report.ok:
        payload = {"relations_ok": False,
                   "failures": [{"name": c.name, "detail": c.detail}
                                for c in report.failures()]}
        lines = ["relations: FAILED — analysis skipped"]
        lines += [f"  FAIL {c.name}" for c in report.failures()]
        _emit(args, payload, lines)
        return EXIT_VERIFY
    el = homology.end_local_dim(mod)
    lt = homology.loewy_type(mod)
    soc = homology.socle_multiset(mod) if mod.dim else []
    hd = homology.head_multiset(mod) if mod.dim else []
    layers = ([homology._factors_as_json(homology.semisimple_factors(layer))
               for layer in homology.radical_series(mod)] if mod.dim else [])
    comp = homology.composition_factors(mod) if mod.dim else []
    fam = homology.match_family(mod, max_t=args.max_t, max_s=args.max_s,
                                etas=parse_etas(args.etas), seed=args.seed)
    payload = {
        "relations_ok": True,
        "dim": mod.dim,
        "end_local_dim": el,
        "absolutely_indecomposable": el == 1,
        "type": lt.to_json(),
        "socle": soc,
        "head": hd,
        "radical_series": layers,
        "composition_factors": comp,
        "family": fam if fam is not None else OUTSIDE,
    }
    lines = [
        f"dim: {mod.dim}",
        "relations: all hold",
        f"end_local_dim: {el}"
        + (" (absolutely indecomposable)" if el == 1 else ""),
        f"type: (s, t) = ({lt.s}, {lt.t}), radical length {lt.rl}",
        f"socle: {_factor_str(soc)}",
        f"head: {_factor_str(hd)}",
        "radical series: " + " | ".join(_factor_str(f) for f in layers),
        f"composition factors: {_factor_str(comp)}",
        f"family: {fam if fam is not None else OUTSIDE}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_module_compare(args) -> int:
    a = _load_module(args.file_a)
    b = _load_module(args.file_b)
    verdict = homology.is_isomorphic(a, b, seed=args.seed)
    payload = verdict.to_json()
    lines = [f"verdict: {verdict.verdict}", f"reason: {verdict.reason}"]
    if verdict.trials:
        lines.append(f"witness trials: {verdict.trials}")
    _emit(args, payload, lines)
    return EXIT_OK if verdict.verdict in ("yes", "no") else EXIT_VERIFY


# ---------------------------------------------------------------------------
# ar check


def cmd_ar_check(args) -> int:
    datum = _load_datum(args.file)
    etas = parse_etas(args.etas)
    weights = None
    if args.lam is not None:
        if args.l is None:
            raise DatumError("--lambda needs --l")
        weights = [(args.l, parse_weight(datum, args.lam))]
    elif args.l is not None:
        weights = [(args.l, datum.weights_in_class(args.l)[0])]
    seqs = homology.ar_sequences_for_lemma(datum, args.lemma, max_t=args.max_t,
                                           etas=etas, weights=weights)
    entries = []
    all_ok = True
    t0 = time.monotonic()
    for name, a, mids, c in seqs:
        found = homology.ses_candidate(a, mids, c, seed=args.seed)
        if found is None:
            entries.append({"sequence": name, "built": False})
            all_ok = False
            continue
        b, f, g = found
        rep = homology.ar_candidate_check(f, g, seed=args.seed)
        entry = {"sequence": name, "built": True,
                 "dims": [a.dim, b.dim, c.dim], **rep.to_json()}
        entries.append(entry)
        all_ok = all_ok and rep.ar_ok
    payload = {"lemma": args.lemma, "max_t": args.max_t,
               "sequences": entries,
               "total": len(entries),
               "ok": sum(1 for e in entries if e.get("ar_ok"))}
    lines = []
    for e in entries:
        if not e["built"]:
            lines.append(f"{e['sequence']}: FAILED to realize maps")
        else:
            status = "ok" if e.get("ar_ok") else "FAILED"
            lines.append(f"{e['sequence']}: dims {e['dims']} "
                         f"exact={e['exact']} split={e.get('split')} "
                         f"ends_local=({e.get('left_end_local')},{e.get('right_end_local')}) "
                         f"translate={e.get('translate_left_is_omega2_right')} -> {status}")
    lines.append(f"sequences: {payload['ok']}/{payload['total']} satisfy all "
                 "almost-split conditions")
    print(f"ar check wall time: {time.monotonic() - t0:.2f}s", file=sys.stderr)
    _emit(args, payload, lines)
    return EXIT_OK if all_ok else EXIT_VERIFY


# ---------------------------------------------------------------------------
# classify


def _tau_orbit_reps(datum: ValidatedDatum, l: int) -> list[Weight]:
    seen: set = set()
    reps = []
    for w in datum.weights_in_class(l):
        if w in seen:
            continue
        reps.append(w)
        cur = w
        for _ in range(datum.m):
            seen.add(cur)
            cur = datum.tau(cur, 1)
    return reps


def _classify_specs(datum: ValidatedDatum, max_t: int, max_s: int,
                    etas: list[constructors.EtaParam]) -> list[dict]:
    """Deterministic enumeration plan for the classification manifest."""
    n, m = datum.n, datum.m
    specs = []
    for l in range(1, n + 1):
        for w in datum.weights_in_class(l):
            specs.append({"family": "V", "l": l, "lambda": w.label(),
                          "weight": w.to_json()})
    for l in range(1, n):
        for w in datum.weights_in_class(l):
            specs.append({"family": "P", "l": l, "lambda": w.label(),
                          "weight": w.to_json()})
    for l in range(1, n):
        for w in datum.weights_in_class(l):
            for sign in (1, -1):
                for s in range(1, max_s + 1):
                    specs.append({"family": "Omega", "l": l, "lambda": w.label(),
                                  "weight": w.to_json(), "s": sign * s})
    if m == 1:
        for l in range(1, n):
            for w in datum.weights_in_class(l):
                for t in range(1, max_t + 1):
                    for ep in etas:
                        specs.append({"family": "W", "l": l, "lambda": w.label(),
                                      "weight": w.to_json(), "t": t,
                                      "eta": str(ep)})
    else:
        for l in range(1, n):
            for w in datum.weights_in_class(l):
                for t in range(1, max_t + 1):
                    specs.append({"family": "T", "l": l, "lambda": w.label(),
                                  "weight": w.to_json(), "t": t})
                    specs.append({"family": "Tbar", "l": l, "lambda": w.label(),
                                  "weight": w.to_json(), "t": t})
        for l in range(1, n):
            for w in _tau_orbit_reps(datum, l):
                for t in range(1, max_t + 1):
                    for ep in etas:
                        if ep.is_inf or ep.scalar(datum).is_zero():
                            continue  # band holonomy must be a unit
                        specs.append({"family": "M", "l": l, "lambda": w.label(),
                                      "weight": w.to_json(), "t": t,
                                      "eta": str(ep)})
    return specs


def _build_spec(datum: ValidatedDatum, spec: dict) -> ModuleRep:
    w = Weight.from_json(datum.group, spec["weight"])
    fam, l = spec["family"], spec["l"]
    if fam == "V":
        return constructors.simple(datum, l, w)
    if fam == "P":
        return constructors.projective(datum, l, w)
    if fam == "Omega":
        return homology.omega_power(datum, l, w, spec["s"])
    if fam == "T":
        return constructors.t_chain(datum, l, w, spec["t"])
    if fam == "Tbar":
        return constructors.t_chain_bar(datum, l, w, spec["t"])
    if fam == "M":
        return constructors.band(datum, l, w,
                                 constructors.EtaParam.parse(spec["eta"]), spec["t"])
    if fam == "W":
        return constructors.w_band(datum, l, w,
                                   constructors.EtaParam.parse(spec["eta"]), spec["t"])
    raise DatumError(f"unknown family spec {fam!r}")


def _spec_tag(spec: dict) -> str:
    fam = spec["family"]
    parts = [f"l={spec['l']}", f"lam={spec['lambda']}"]
    if "s" in spec:
        parts.append(f"s={spec['s']}")
    if "t" in spec:
        parts.append(f"t={spec['t']}")
    if "eta" in spec:
        parts.append(f"eta={spec['eta']}")
    return f"{fam}({', '.join(parts)})"


def _expected_type(spec: dict, m: int) -> tuple[int, int, int] | None:
    """(s, t, rl) predicted for each family entry."""
    fam = spec["family"]
    if fam == "V":
        return (1, 1, 1)
    if fam == "P":
        return (1, 1, 3)
    if fam == "Omega":
        s = spec["s"]
        return (s + 1, s, 2) if s > 0 else (-s, -s + 1, 2)
    if fam in ("T", "Tbar", "W"):
        return (spec["t"], spec["t"], 2)
    if fam == "M":
        return (spec["t"] * m, spec["t"] * m, 2)
    return None


def _classify_entry(datum: ValidatedDatum, spec: dict,
                    mod: ModuleRep | None = None) -> dict:
    if mod is None:
        mod = _build_spec(datum, spec)
    rel = mod.verify_relations()
    el = homology.end_local_dim(mod)
    lt = homology.loewy_type(mod)
    expected = _expected_type(spec, datum.m)
    entry = {
        "tag": _spec_tag(spec),
        **{k: v for k, v in spec.items() if k != "weight"},
        "dim": mod.dim,
        "relations_ok": rel.ok,
        "end_local_dim": el,
        "type": lt.to_json(),
        "type_ok": expected is None or (lt.s, lt.t, lt.rl) == expected,
    }
    return entry


def _classify_worker(payload: tuple[dict, dict]) -> tuple[dict, dict]:
    datum_json, spec = payload
    datum = datum_from_json(datum_json)
    mod = _build_spec(datum, spec)
    return _classify_entry(datum, spec, mod), mod.to_json()


def cmd_classify(args) -> int:
    datum = _load_datum(args.file)
    etas = parse_etas(args.etas)
    t0 = time.monotonic()
    specs = _classify_specs(datum, args.max_t, args.max_s, etas)
    entries: list[dict] = []
    modules: list[ModuleRep] = []
    total_dim = 0
    truncated = False
    if args.jobs > 1:
        dj = datum.to_json()
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_classify_worker, [(dj, s) for s in specs],
                                    chunksize=4))
        for (entry, mod_json), spec in zip(results, specs):
            if total_dim + entry["dim"] > args.budget:
                truncated = True
                break
            total_dim += entry["dim"]
            entries.append(entry)
            modules.append(ModuleRep.from_json(mod_json))
    else:
        for spec in specs:
            mod = _build_spec(datum, spec)
            if total_dim + mod.dim > args.budget:
                truncated = True
                break
            total_dim += mod.dim
            entries.append(_classify_entry(datum, spec, mod))
            modules.append(mod)
    # pairwise distinctness across the manifest
    cache = []
    for mod in modules:
        cache.append({
            "wm": mod.weight_multiset(),
            "xk": len(mod.x_kernel()),
            "xik": len(mod.xi_kernel()),
        })
    iso_pairs = []
    hom_pairs = 0
    min_sum_el = None
    for i in range(len(modules)):
        for j in range(i + 1, len(modules)):
            a, b = modules[i], modules[j]
            ela, elb = entries[i]["end_local_dim"], entries[j]["end_local_dim"]
            if (a.dim != b.dim or cache[i]["wm"] != cache[j]["wm"]
                    or cache[i]["xk"] != cache[j]["xk"]
                    or cache[i]["xik"] != cache[j]["xik"]):
                pair_el = ela + elb
            else:
                hom_pairs += 1
                homs_ab = homology.hom_space(a, b)
                homs_ba = homology.hom_space(b, a)
                r = 0
                if homs_ab and homs_ba:
                    tmat = [[frobenius_pair(f.matrix, g.matrix) for g in homs_ba]
                            for f in homs_ab]
                    r = rank(Mat(datum.N, tmat, len(homs_ba)))
                pair_el = ela + elb + 2 * r
                if r > 0:
                    iso_pairs.append([entries[i]["tag"], entries[j]["tag"]])
            if min_sum_el is None or pair_el < min_sum_el:
                min_sum_el = pair_el
    counts: dict[str, int] = {}
    for e in entries:
        counts[e["family"]] = counts.get(e["family"], 0) + 1
    n_pairs = len(modules) * (len(modules) - 1) // 2
    payload = {
        "bounds": {"max_t": args.max_t, "max_s": args.max_s,
                   "etas": [str(e) for e in etas], "budget": args.budget},
        "entries": entries,
        "pairwise": {
            "pairs": n_pairs,
            "distinct": n_pairs - len(iso_pairs),
            "isomorphic_pairs": iso_pairs,
            "hom_solved_pairs": hom_pairs,
            "min_sum_end_local": min_sum_el,
        },
        "summary": {
            "modules": len(entries),
            "counts": counts,
            "max_dim": max((e["dim"] for e in entries), default=0),
            "total_dim": total_dim,
            "all_end_local_one": all(e["end_local_dim"] == 1 for e in entries),
            "all_relations_ok": all(e["relations_ok"] for e in entries),
            "all_types_ok": all(e["type_ok"] for e in entries),
        },
        "truncated": truncated,
    }
    ok = (payload["summary"]["all_end_local_one"]
          and payload["summary"]["all_relations_ok"]
          and payload["summary"]["all_types_ok"]
          and not iso_pairs)
    payload["ok"] = ok
    lines = []
    for e in entries:
        lines.append(f"{e['tag']}: dim {e['dim']}, el {e['end_local_dim']}, "
                     f"type ({e['type']['s']},{e['type']['t']}) rl {e['type']['rl']}"
                     + ("" if e["relations_ok"] and e["type_ok"] else " [CHECK FAILED]"))
    lines.append(f"modules: {len(entries)} "
                 + " ".join(f"{k}:{v}" for k, v in sorted(counts.items())))
    lines.append(f"pairwise: {n_pairs} pairs, {n_pairs - len(iso_pairs)} distinct, "
                 f"{hom_pairs} needed Hom solves, "
                 f"min end_local_dim of a pair sum: {min_sum_el}")
    if iso_pairs:
        for p in iso_pairs:
            lines.append(f"  ISOMORPHIC: {p[0]} == {p[1]}")
    if truncated:
        lines.append(f"TRUNCATED: dimension budget {args.budget} exhausted "
                     f"after {len(entries)} of {len(specs)} modules")
    lines.append(f"manifest {'ok' if ok else 'FAILED'}")
    print(f"classify wall time: {time.monotonic() - t0:.2f}s", file=sys.stderr)
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_VERIFY


# ---------------------------------------------------------------------------
# argument parser


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default text)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for witness searches (default 0)")
    common.add_argument("--jobs", type=int, default=1,
                        help="worker processes for enumeration commands")

    top = argparse.ArgumentParser(
        prog="doublerep",
        description="Exact module constructions over the double of a "
                    "pointed rank-one Hopf algebra")
    sub = top.add_subparsers(dest="command", required=True)

    p_datum = sub.add_parser("datum", help="datum operations")
    sub_datum = p_datum.add_subparsers(dest="subcommand", required=True)
    p = sub_datum.add_parser("check", parents=[common],
                             help="validate a datum file and report constants")
    p.add_argument("file")
    p.set_defaults(func=cmd_datum_check)

    p_weights = sub.add_parser("weights", help="weight enumeration")
    sub_weights = p_weights.add_subparsers(dest="subcommand", required=True)
    p = sub_weights.add_parser("list", parents=[common],
                               help="list weights grouped by class")
    p.add_argument("file")
    p.set_defaults(func=cmd_weights_list)

    p_module = sub.add_parser("module", help="module operations")
    sub_module = p_module.add_subparsers(dest="subcommand", required=True)

    p = sub_module.add_parser("build", parents=[common],
                              help="construct a family member and emit its JSON")
    p.add_argument("file")
    p.add_argument("--family", required=True, choices=CLI_FAMILIES)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--lambda", dest="lam", default=None,
                   help="weight: JSON or 'g1,..;h1,..'")
    p.add_argument("--t", type=int, default=None, help="chain/band length")
    p.add_argument("--s", type=int, default=1, help="syzygy exponent (signed)")
    p.add_argument("--eta", default=None, help="band parameter: scalar or 'inf'")
    p.add_argument("--basis", choices=("natural", "standard"), default="natural")
    p.add_argument("--out", default=None, help="write module JSON here instead of stdout")
    p.set_defaults(func=cmd_module_build)

    p = sub_module.add_parser("verify", parents=[common],
                              help="check every defining relation on a module file")
    p.add_argument("file")
    p.set_defaults(func=cmd_module_verify)

    p = sub_module.add_parser("analyze", parents=[common],
                              help="structural report: socle/radical, type, "
                                   "indecomposability, family match")
    p.add_argument("file")
    p.add_argument("--max-t", type=int, default=4)
    p.add_argument("--max-s", type=int, default=4)
    p.add_argument("--etas", default="0,1,-1,2,inf")
    p.set_defaults(func=cmd_module_analyze)

    p = sub_module.add_parser("compare", parents=[common],
                              help="certified isomorphism test of two module files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_module_compare)

    p_ar = sub.add_parser("ar", help="almost-split sequence checks")
    sub_ar = p_ar.add_subparsers(dest="subcommand", required=True)
    p = sub_ar.add_parser("check", parents=[common],
                          help="build and verify the named sequences")
    p.add_argument("file")
    p.add_argument("--lemma", required=True,
                   choices=("4.5", "4.9", "4.10", "4.20", "4.28"))
    p.add_argument("--max-t", type=int, default=1)
    p.add_argument("--etas", default="1")
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--lambda", dest="lam", default=None)
    p.set_defaults(func=cmd_ar_check)

    p = sub.add_parser("classify", parents=[common],
                       help="enumerate the classified families within bounds, "
                            "verify each entry, and check pairwise distinctness")
    p.add_argument("file")
    p.add_argument("--max-t", type=int, default=2)
    p.add_argument("--max-s", type=int, default=2)
    p.add_argument("--etas", default="1,-1")
    p.add_argument("--budget", type=int, default=4096,
                   help="total matrix dimension budget (default 4096)")
    p.set_defaults(func=cmd_classify)

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DatumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
