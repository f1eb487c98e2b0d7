"""Walkthrough: sweeping the family -2n+1, -2n+a for single-component graphs.

Base -2 with digits {1, a} can spell every integer exactly when the graph of
the system {1 mod -2, a mod -2} is connected with 0 on its cycle.  Sweeping a
over [-100, 100] and counting components exposes a crisp pattern in the
values of a that work.

Run:  python demos/03_single_component_scan.py
"""

from ecsd import DigitSystem, Ecsd, parse_system

single = []
for a in range(-100, 101):
    term = f"-2n+{a}" if a >= 0 else f"-2n{a}"
    system = parse_system(f"-2n+1,{term}")
    if not system.is_exact:        # needs one odd and one even residue
        continue
    analysis = Ecsd(system).analyze()
    if analysis.component_count == 1:
        single.append((a, analysis))

print("single-component members of -2n+1, -2n+a for a in [-100, 100]:")
for a, analysis in single:
    cycle = analysis.cycles[0]
    print(f"  a = {a:4d}   cycle length {len(cycle):2d},  "
          f"cycle minimum {cycle.vertices[0]}")

values = [a for a, _ in single]
powers = sorted(s * 3**m + 1 for m in range(5) for s in (1, -1))
print(f"\nfound:          {values}")
print(f"+-3^m + 1 form: {powers}")
print(f"identical: {values == powers}")

# Each of these is a working binary-with-a-twist numeral system.
print("\neach member spells every integer with digits {1, a} in base -2:")
for a, _ in single:
    system = DigitSystem(-2, (1, a))
    assert system.is_complete()
    parts = []
    for n in (-2, 7):
        encoded = system.encode(n)
        text = str(encoded)
        parts.append(f"{n}={text}" if len(text) <= 24 else f"{n}=<{len(encoded)} digits>")
    print(f"  a = {a:4d}:  {', '.join(parts)}")
