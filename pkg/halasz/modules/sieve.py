"""Sieve Module"""
import logging

from gaussian import prime_ideal_sieve, session_sieve

from . import Module


class SieveModule(Module):
    """
    List the prime ideals up to a norm
    """

    COLUMNS = ["norm", "re", "im", "kind", "rational_prime"]
    OUTPUT = "sieve.csv"

    def setup_cli(self, parser):
        self.describe(parser, "Prime ideals of Z[i] with norm <= x-max.")

    async def handle_cli(self, args):
        x_max = self.x_max(1000)
        logging.info(f"Sieving prime ideals up to {x_max}")
        primes = prime_ideal_sieve(x_max)
        census = session_sieve(x_max).census(x_max)
        logging.info(", ".join(f"{count} {kind}" for kind, count in census.items()))

        rows = [
            {
                "norm": prime.norm,
                "re": prime.generator.re,
                "im": prime.generator.im,
                "kind": prime.kind.name.lower(),
                "rational_prime": prime.rational_prime,
            }
            for prime in primes
        ]
        self.emit(rows)
