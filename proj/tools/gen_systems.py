#!/usr/bin/env python3
"""Expand data/systems/source.txt into per-model term-list files and the
embedded header include/phasekit/detail/simple_systems_data.hpp.

Usage: python3 tools/gen_systems.py [--check] [repo_root]

With --check nothing is written; the exit status is nonzero when the
generated files differ from what the source would produce.
"""
import pathlib
import sys

import sympy as sp

VARS = sp.symbols("k1 k2 k3 k4 k5 L1 L2 L3 S1 S2")
NAMES = [str(v) for v in VARS]
V_ORDER = ["L1", "L2", "L3", "S1", "S2"]


def fnv1a64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return h


def parse_source(text):
    models = []
    cur = None
    sys_ = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition(" ")
        if head == "MODEL":
            cur = {"name": rest.strip(), "ranking": None, "systems": []}
            models.append(cur)
        elif head == "RANKING":
            cur["ranking"] = rest.split()
        elif head == "SYSTEM":
            sys_ = {"index": int(rest), "rels": []}
            cur["systems"].append(sys_)
        elif head in ("EQ", "NEQ"):
            sys_["rels"].append((head, sp.expand(sp.sympify(rest, locals=dict(zip(NAMES, VARS))))))
        else:
            raise SystemExit(f"bad line: {raw}")
    return models


def leader(poly, order):
    free = {str(s) for s in poly.free_symbols}
    for name in order:
        if name in free:
            return name
    return "1"


def render_terms(poly):
    p = sp.Poly(poly, *VARS)
    out = []
    for monom, coeff in sorted(p.terms()):
        if not coeff.is_integer:
            raise SystemExit(f"non-integer coefficient in {poly}")
        if max(monom) > 9:
            raise SystemExit(f"exponent too large in {poly}")
        out.append(f"{int(coeff)}:{''.join(str(e) for e in monom)}")
    return " ".join(out)


def render_model(model):
    order = model["ranking"] + V_ORDER
    lines = [f"MODEL {model['name']}", "RANKING " + " ".join(order)]
    for s in model["systems"]:
        lines.append(f"SYSTEM {s['index']}")
        seen = {}
        for kind, poly in s["rels"]:
            lead = leader(poly, order)
            if lead == "1":
                raise SystemExit(f"{model['name']} S{s['index']}: constant relation")
            deg = sp.degree(poly, sp.Symbol(lead))
            if lead.startswith("k") and deg > 2:
                raise SystemExit(f"{model['name']} S{s['index']}: degree {deg} in {lead}")
            if kind == "EQ":
                if lead in seen:
                    raise SystemExit(f"{model['name']} S{s['index']}: two equations with leader {lead}")
                seen[lead] = True
            lines.append(f"{kind}; {lead}; {render_terms(poly)}")
    return "\n".join(lines) + "\n"


def main():
    args = sys.argv[1:]
    check = "--check" in args
    args = [a for a in args if a != "--check"]
    root = pathlib.Path(args[0] if args else pathlib.Path(__file__).resolve().parents[1])
    models = parse_source((root / "data/systems/source.txt").read_text())
    outputs = {}
    blobs = []
    for m in models:
        text = render_model(m)
        outputs[root / f"data/systems/{m['name']}.sys"] = text
        blobs.append((m["name"], text, fnv1a64(text.encode())))

    hdr = ["// Generated by tools/gen_systems.py from data/systems/source.txt. Do not edit.",
           "#pragma once", "", "#include <array>", "#include <cstdint>", "#include <string_view>", "",
           "namespace phasekit::detail {", "",
           "struct EmbeddedSystems {", "  std::string_view model;", "  std::string_view text;",
           "  std::uint64_t fnv1a;", "};", "",
           f"inline constexpr std::array<EmbeddedSystems, {len(blobs)}> kEmbeddedSystems{{{{"]
    for name, text, h in blobs:
        hdr.append(f'    {{"{name}", R"SYS({text})SYS", 0x{h:016x}ULL}},')
    hdr += ["}};", "", "}  // namespace phasekit::detail", ""]
    outputs[root / "include/phasekit/detail/simple_systems_data.hpp"] = "\n".join(hdr)
    if check:
        stale = [str(p) for p, text in outputs.items() if not p.exists() or p.read_text() != text]
        for p in stale:
            print(f"out of date: {p}")
        sys.exit(1 if stale else 0)
    for p, text in outputs.items():
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(text)
    for name, _, h in blobs:
        print(f"{name} 0x{h:016x}")


if __name__ == "__main__":
    main()
