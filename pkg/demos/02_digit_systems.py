"""Walkthrough: numeral systems with unusual digits, and which ones reach
every integer.

Ordinary base 2 writes nonnegative integers only.  Allowing a negative base,
or digits other than 0..d-1, changes which integers are representable, and
the answer is a graph question: n is representable exactly when the graph of
n -> base*n + digit walks from 0 to n.

Run:  python demos/02_digit_systems.py
"""

from ecsd import DigitString, DigitSystem, balanced_ternary, nega_family

systems = {
    "binary": DigitSystem(2, (0, 1)),
    "negabinary": nega_family(2),
    "balanced ternary": balanced_ternary(),
    "base -2, digits {1,4}": DigitSystem(-2, (1, 4)),
}

print(f"{'system':24s} {'complete':9s} zero block")
for name, system in systems.items():
    print(f"{name:24s} {str(system.is_complete()):9s} {system.zero_cycle_block()}")

print("\nencodings (- means not representable):")
header = f"{'n':>6s} " + " ".join(f"{name:>18s}" for name in systems)
print(header)
for n in [-9, -3, -1, 0, 1, 6, 11]:
    row = [f"{n:>6d}"]
    for system in systems.values():
        encoded = system.encode(n)
        row.append(f"{str(encoded) if encoded else '-':>18s}")
    print(" ".join(row))

# Base -2 with digits {1, 4}: 0 is on the 3-cycle 0 -> 1 -> 2 -> 0, so the
# shortest spelling of zero is three digits long, and longer spellings of any
# number differ from the shortest one by leading copies of that block.
oddball = systems["base -2, digits {1,4}"]
print(f"\nzero block of {oddball}: {oddball.zero_cycle_block()}")
for text in ["141", "144141", "144144141"]:
    s = DigitString.parse(text)
    print(f"  {text:>9s} decodes to {oddball.decode(s)}, "
          f"canonical form {oddball.canonicalize(s)}")

# Round trip sanity on a window, plus one deliberately huge value.
for name, system in systems.items():
    if not system.is_complete():
        continue
    assert all(system.decode(system.encode(n)) == n for n in range(-500, 501))
big = -(10**30) + 7
print(f"\nnegabinary round-trips {big}: "
      f"{systems['negabinary'].decode(systems['negabinary'].encode(big)) == big}")
