"""Command-line front end: ``picardlab <verb> [options]``.

Results go to stdout (json, csv or text), logs to stderr.  Exit codes:
0 success, 1 usage error, 2 when ``verify`` reports a failing claim.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from . import census, cohomology, gaction, weyl
from .picard import del_pezzo, dynkin_type

SCHEMA = gaction.SCHEMA
log = logging.getLogger("picardlab")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _degree(text: str) -> int:
    try:
        d = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"degree must be an integer, got {text!r}")
    if not 1 <= d <= 7:
        raise argparse.ArgumentTypeError(f"degree must lie in [1, 7], got {d}")
    return d


def build_parser() -> _Parser:
    p = _Parser(prog="picardlab", description="Lattice-side computations for group actions on rational surfaces.")
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = p.add_subparsers(dest="verb", metavar="verb", parser_class=_Parser)

    def add(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--format", choices=("json", "csv", "text"), default="text")
        return sp

    for name, text in (("lattice", "gram matrix and canonical class"),
                       ("roots", "root system of a del Pezzo lattice"),
                       ("lines", "exceptional classes of a del Pezzo lattice")):
        add(name, text).add_argument("--degree", type=_degree, required=True)

    w = add("weyl", "Weyl group order, optionally enumerated")
    w.add_argument("--degree", type=_degree, required=True)
    w.add_argument("--enumerate", action="store_true", help="enumerate and report element orders")
    w.add_argument("--enumeration-cap", type=int, default=weyl.DEFAULT_CAP)

    a = add("action", "per-element traces, profiles and orbits of a census group")
    a.add_argument("--census", required=True, metavar="NAME")
    a.add_argument("--heavy", action="store_true")

    h = add("h1", "first cohomology of a census group")
    h.add_argument("--census", required=True, metavar="NAME")
    h.add_argument("--all-subgroups", action="store_true", help="test every subgroup up to conjugacy")
    h.add_argument("--heavy", action="store_true")

    c = add("census", "list or export census entries")
    c.add_argument("--list", action="store_true")
    c.add_argument("--name", metavar="NAME", help="export one entry")
    c.add_argument("--heavy", action="store_true")

    v = add("verify", "run the claim registry")
    v.add_argument("--heavy", action="store_true")
    v.add_argument("--claim", action="append", metavar="ID", help="restrict to these claim ids (repeatable)")
    return p


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False, indent=2) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def cmd_lattice(args) -> str:
    l = del_pezzo(args.degree)
    d = {"schema": SCHEMA, **l.to_json()}
    if args.format == "json":
        return _dump(d)
    if args.format == "csv":
        return _csv([f"c{i}" for i in range(l.rank)], l.gram.tolist())
    rows = "\n".join("  " + " ".join(f"{x:3d}" for x in r) for r in l.gram.tolist())
    return f"{l.lattice_id}: rank {l.rank}\ngram:\n{rows}\nK = {_vec(l.canonical)}\n"


def _class_listing(args, classes, label, extra=None) -> str:
    l = del_pezzo(args.degree)
    if args.format == "json":
        d = {"schema": SCHEMA, "lattice": l.lattice_id, "count": len(classes)}
        d.update(extra or {})
        d["classes"] = [list(x) for x in classes]
        return _dump(d)
    if args.format == "csv":
        return _csv([f"c{i}" for i in range(l.rank)], classes)
    head = f"{len(classes)} {label} in {l.lattice_id}"
    if extra:
        head += " (" + ", ".join(f"{k} {v}" for k, v in extra.items()) + ")"
    return head + "\n" + "".join(_vec(x) + "\n" for x in classes)


def cmd_roots(args) -> str:
    l = del_pezzo(args.degree)
    return _class_listing(args, l.root_system.roots, "roots", {"type": dynkin_type(l)})


def cmd_lines(args) -> str:
    return _class_listing(args, del_pezzo(args.degree).exceptional.classes, "lines")


def cmd_weyl(args) -> str:
    l = del_pezzo(args.degree)
    gens = weyl.weyl_generators(l)
    d = {"schema": SCHEMA, "lattice": l.lattice_id, "type": dynkin_type(l),
         "generators": [g.array.tolist() for g in gens]}
    if args.enumerate:
        g = weyl.generate(l, gens, args.enumeration_cap)
        d["order"] = g.order
        d["element_orders"] = {str(k): v for k, v in sorted(weyl.element_orders(g).items())}
    else:
        d["order"] = weyl.group_order_orbit_stabilizer(l, gens)
    if args.format == "json":
        return _dump(d)
    if args.format == "csv":
        rows = [["order", d["order"]]] + [[f"elements_of_order_{k}", v] for k, v in d.get("element_orders", {}).items()]
        return _csv(["field", "value"], rows)
    out = f"W({d['type']}) on {l.lattice_id}: order {d['order']}\n"
    for k, v in d.get("element_orders", {}).items():
        out += f"  order {k}: {v} elements\n"
    return out


def _census_entry(name: str, heavy: bool) -> census.CensusEntry:
    if name not in census.ENTRIES:
        raise UsageError(f"unknown census entry {name!r}; try 'census --list'")
    if name in census.HEAVY_ENTRIES and not heavy:
        raise UsageError(f"census entry {name!r} needs --heavy")
    return census.entry(name)


def cmd_action(args) -> str:
    e = _census_entry(args.census, args.heavy)
    report = gaction.analyze(e.group)
    if args.format == "json":
        d = report.to_json()
        d["census"] = e.id
        return _dump(d)
    if args.format == "csv":
        return report.to_csv()
    lines = [f"{e.id} on {e.lattice.lattice_id}: order {e.group.order}, invariant rank {report.invariant_rank}",
             f"orbit sizes: {report.orbit_sizes}",
             f"trace multiset on Q: {report.trace_multiset()}"]
    for r in report.per_element:
        lines.append(f"  #{r.index}: order {r.order}, trace {r.trace_on_Q}, euler {r.predicted_euler}, {r.profile}")
    return "\n".join(lines) + "\n"


def cmd_h1(args) -> str:
    e = _census_entry(args.census, args.heavy)
    res = cohomology.h1(e.group)
    d = {"schema": SCHEMA, "census": e.id, "order": e.group.order, "h1": list(res.invariant_factors),
         "h1_text": str(res)}
    if args.all_subgroups:
        ok, witness = cohomology.h1_trivial_all_subgroups(e.group)
        d["h1_trivial_all_subgroups"] = ok
        d["smallest_offending_subgroup_order"] = None if witness is None else witness.order
    if args.format == "json":
        return _dump(d)
    if args.format == "csv":
        return _csv(list(k for k in d if k != "schema"), [[_cell(d[k]) for k in d if k != "schema"]])
    out = f"H^1({e.id}) = {res}\n"
    if args.all_subgroups:
        out += "H^1-trivial on all subgroups: " + ("yes" if d["h1_trivial_all_subgroups"] else
                                                  f"no (order {d['smallest_offending_subgroup_order']})") + "\n"
    return out


def _cell(x):
    return " ".join(str(v) for v in x) if isinstance(x, list) else x


def cmd_census(args) -> str:
    if args.name:
        e = _census_entry(args.name, args.heavy)
        # entries are nested structures; every format exports JSON
        return _dump({"schema": SCHEMA, **e.to_json()})
    names = list(census.ENTRIES)
    if args.format == "json":
        return _dump({"schema": SCHEMA, "entries": [{"id": n, "heavy": n in census.HEAVY_ENTRIES} for n in names]})
    if args.format == "csv":
        return _csv(["id", "heavy"], [[n, n in census.HEAVY_ENTRIES] for n in names])
    return "".join(f"{n}{'  (heavy)' if n in census.HEAVY_ENTRIES else ''}\n" for n in names)


def cmd_verify(args) -> tuple[str, int]:
    results = census.verify_all(heavy=args.heavy, claim_ids=args.claim)
    failed = any(r.status == census.FAIL for r in results)
    if args.format == "json":
        out = _dump({"schema": SCHEMA, "claims": [r.to_json() for r in results]})
    elif args.format == "csv":
        out = _csv(["claim_id", "status", "expected", "actual", "paper_anchor"],
                   [[r.claim_id, r.status, json.dumps(r.to_json()["expected"]), json.dumps(r.to_json()["actual"]),
                     r.anchor] for r in results])
    else:
        out = "".join(f"{r.status:>20}  {r.claim_id}  [{r.anchor}]\n" for r in results)
        counts = {}
        for r in results:
            counts[r.status] = counts.get(r.status, 0) + 1
        out += "summary: " + (", ".join(f"{k} {v}" for k, v in sorted(counts.items())) or "no claims selected") + "\n"
    return out, 2 if failed else 0


COMMANDS = {
    "lattice": cmd_lattice,
    "roots": cmd_roots,
    "lines": cmd_lines,
    "weyl": cmd_weyl,
    "action": cmd_action,
    "h1": cmd_h1,
    "census": cmd_census,
    "verify": cmd_verify,
}


def _configure_logging(stream, verbose: bool) -> None:
    for h in list(log.handlers):
        if getattr(h, "_picardlab_cli", False):
            log.removeHandler(h)
    handler = logging.StreamHandler(stream)
    handler._picardlab_cli = True
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.DEBUG if verbose else logging.WARNING)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.verb is None:
            raise UsageError("a verb is required")
    except UsageError as exc:
        stderr.write(parser.format_usage())
        stderr.write(f"error: {exc}\n")
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    _configure_logging(stderr, args.verbose)
    try:
        result = COMMANDS[args.verb](args)
    except UsageError as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    except weyl.GroupTooLarge as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    code = 0
    if isinstance(result, tuple):
        result, code = result
    stdout.write(result)
    return code


def main() -> None:
    sys.exit(run())
