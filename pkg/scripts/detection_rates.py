"""Measure single-field corruption detection across message sizes.

    python scripts/detection_rates.py --seed 0 --per-size 3
"""
import argparse
import random
import string

from fibq.codec import encode
from fibq.errors import EncodabilityError
from fibq.integrity import detection_sweep


def random_encodable(rng, length):
    while True:
        msg = "".join(rng.choice(string.ascii_uppercase + " ") for _ in range(length))
        try:
            return msg, encode(msg)
        except EncodabilityError:
            continue


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--per-size", type=int, default=3)
    parser.add_argument("--samples", type=int, default=5000)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    cases = [("MATH", encode("MATH")), ("NIHAL HELLO", encode("NIHAL HELLO"))]
    for length in (4, 16, 36, 64, 100):
        cases += [random_encodable(rng, length) for _ in range(args.per_size)]

    print(f"{'b':>4} {'n':>4} {'mode':>10} {'total':>6} {'detected':>8} {'silent':>6} {'fraction':>8}  message")
    for msg, c in cases:
        r = detection_sweep(c, msg, seed=args.seed, samples=args.samples)
        label = msg if len(msg) <= 24 else msg[:21] + "..."
        print(f"{c.b:>4} {c.n:>4} {r.mode:>10} {r.total:>6} {r.detected:>8} {r.silent:>6} {r.fraction:>8.4f}  {label!r}")


if __name__ == "__main__":
    main()
