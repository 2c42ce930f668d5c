"""Lattice-aware variation operators registered on the DEAP toolbox.

Both operators work in place on list-like individuals and return tuples, the
DEAP convention. Outputs are always repaired back into the genome space.
"""

import numpy as np

from rlvopt.optimizer.genome import GenomeSpace


def mutate(individual, space: GenomeSpace, gene_prob: float, rng: np.random.Generator):
    """Resample each gene with probability ``gene_prob``."""
    for i in range(len(individual)):
        if rng.random() < gene_prob:
            individual[i] = space.resample_gene(individual, i, rng)
    space.repair(individual)
    return (individual,)


def crossover(a, b, space: GenomeSpace, gene_prob: float, rng: np.random.Generator):
    """Uniform crossover: swap corresponding genes with probability ``gene_prob``."""
    for i in range(len(a)):
        if rng.random() < gene_prob:
            a[i], b[i] = b[i], a[i]
    space.repair(a)
    space.repair(b)
    return a, b
