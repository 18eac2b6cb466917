#!/usr/bin/env python3
"""Independent brute-force oracle for the frozen expected values in the C++ tests.

Plain nested loops over small ranges; shares no code with the library.
Run: python3 tests/oracles/brute_force.py
"""
from math import isqrt


def four_square_reps_n(n):
    out = []
    r = isqrt(n)
    for x in range(r + 1):
        for y in range(r + 1):
            for z in range(r + 1):
                for w in range(r + 1):
                    if x * x + y * y + z * z + w * w == n:
                        out.append((x, y, z, w))
    return out


def is_square(v):
    return v >= 0 and isqrt(v) ** 2 == v


def three_square_lex_largest(n):
    r = isqrt(n)
    for x in range(r, -1, -1):
        for y in range(x, -1, -1):
            rest = n - x * x - y * y
            if rest < 0:
                continue
            z = isqrt(rest)
            if z * z == rest and z <= y:
                return (x, y, z)
    return None


def ternary_n(a, b, c, n):
    out = []
    for x in range(isqrt(n) + 1):
        for y in range(isqrt(n) + 1):
            for z in range(isqrt(n) + 1):
                if a * x * x + b * y * y + c * z * z == n:
                    out.append((x, y, z))
    return out


def representable(a, b, c, n):
    return bool(ternary_n(a, b, c, n))


def main():
    print("isqrt(624) =", isqrt(624))
    print("three_square(70) =", three_square_lex_largest(70))
    print("ternary (1,2,6) n=9 over N:", ternary_n(1, 2, 6, 9))
    print("r4 over N^4 of 3:", len(four_square_reps_n(3)))
    print("r4 over N^4 of 71:", len(four_square_reps_n(71)))
    reps43 = [r for r in four_square_reps_n(43) if is_square(r[0] + 3 * r[1] + 5 * r[2])]
    print("1-3-5 ordered count a(43):", len(reps43), reps43[:3])
    reps47 = [r for r in four_square_reps_n(47) if is_square(r[0] + 7 * r[1])]
    print("x+7y count a(47):", len(reps47))
    print("x^4+8y^3z+8yz^3 at (1,2,1,1):", 1 + 8 * 8 * 1 + 8 * 2 * 1)
    odd_exc = [n for n in range(1, 3000, 2) if not representable(1, 1, 10, n)]
    print("odd non-reps of x^2+y^2+10z^2 below 3000:", odd_exc)
    # first few terms for the 1-3-5 ordered sequence and x+24y with z<=w
    seq135 = [sum(1 for r in four_square_reps_n(n) if is_square(r[0] + 3 * r[1] + 5 * r[2])) for n in range(20)]
    print("1-3-5 ordered a(0..19):", seq135)
    seq24 = [sum(1 for r in four_square_reps_n(n) if r[2] <= r[3] and is_square(r[0] + 24 * r[1])) for n in range(20)]
    print("x+24y, z<=w a(0..19):", seq24)
    cube_cex = []
    for n in range(0, 600):
        ok = False
        for (x, y, z, w) in four_square_reps_n(n):
            d = x - y
            t = round(abs(d) ** (1 / 3)) if d else 0
            if any((s * s * s == d) for s in range(-t - 2, t + 3)):
                ok = True
                break
        if not ok:
            cube_cex.append(n)
    print("x-y ~ cube counterexamples < 600:", cube_cex)
    # unordered multiset count for plain four squares of 50
    ms = {tuple(sorted(r)) for r in four_square_reps_n(50)}
    print("unordered multisets of 50:", len(ms), "ordered:", len(four_square_reps_n(50)))
    r4z = []
    for n in range(11):
        r = isqrt(n)
        rng = range(-r, r + 1)
        r4z.append(sum(1 for x in rng for y in rng for z in rng for w in rng
                       if x * x + y * y + z * z + w * w == n))
    print("r4 over Z^4, n=0..10:", r4z)
    legs = [r for r in four_square_reps_n(25) if r[1] > 0 and is_square((r[0] + 4 * r[1] + 4 * r[2]) ** 2 + (9 * r[0] + 3 * r[1] + 3 * r[2]) ** 2)
            and r[0] + 4 * r[1] + 4 * r[2] > 0]
    print("legs(x+4y+4z, 9x+3y+3z), y>0, n=25:", legs)


if __name__ == "__main__":
    main()
