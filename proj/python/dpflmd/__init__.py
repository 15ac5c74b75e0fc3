"""Federated differentially private DNA motif mining."""

from ._dpflmd import (
    Alphabet,
    Dataset,
    LoadError,
    MiningParams,
    NoiseFactor,
    ProtocolError,
    Rng,
    ScoredMotif,
    __version__,
    brute_force_cf,
    corrected_threshold,
    debias_frequency,
    exact_mine,
    f1_score,
    generate_candidates,
    generate_synthetic,
    hamming,
    is_approximate,
    load_dataset,
    noise_factor,
    randomize_bit,
    run_mining,
    split_merged,
    support,
)

__all__ = [
    "Alphabet",
    "Dataset",
    "LoadError",
    "MiningParams",
    "NoiseFactor",
    "ProtocolError",
    "Rng",
    "ScoredMotif",
    "__version__",
    "brute_force_cf",
    "corrected_threshold",
    "debias_frequency",
    "exact_mine",
    "f1_score",
    "generate_candidates",
    "generate_synthetic",
    "hamming",
    "is_approximate",
    "load_dataset",
    "noise_factor",
    "randomize_bit",
    "run_mining",
    "split_merged",
    "support",
]
