import logging

import numpy as np
import pytest

from mida import Dataset


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def informative_dataset():
    """Feature 0 carries the label, features 1 and 2 are independent uniform noise."""
    generator = np.random.default_rng(7)
    labels = np.repeat(np.arange(3), 200)
    x = np.column_stack([
        labels + generator.normal(0.0, 0.15, labels.size),
        generator.uniform(size=labels.size),
        generator.uniform(size=labels.size),
    ])
    return Dataset("informative", x, labels)


@pytest.fixture
def blobs_dataset():
    """Four Gaussian classes in six dimensions, two of them informative."""
    generator = np.random.default_rng(11)
    labels = np.repeat(np.arange(4), 30)
    centers = np.array([[0, 0], [3, 0], [0, 3], [3, 3]], dtype=float)
    informative = centers[labels] + generator.normal(0.0, 0.6, (labels.size, 2))
    noise = generator.normal(0.0, 1.0, (labels.size, 4))
    return Dataset("blobs", np.hstack([informative, noise]), labels)


@pytest.fixture
def two_class_dataset():
    """Two classes, eight features with decreasing class separation."""
    generator = np.random.default_rng(5)
    labels = np.repeat(np.arange(2), 60)
    shifts = np.linspace(2.0, 0.0, 8)
    x = generator.normal(0.0, 1.0, (labels.size, 8)) + np.outer(labels, shifts)
    return Dataset("two-class", x, labels)


@pytest.fixture
def package_log(caplog):
    """caplog for the ``mida`` loggers, which otherwise only write to their own console handler."""
    loggers = [candidate for name, candidate in logging.root.manager.loggerDict.items()
               if isinstance(candidate, logging.Logger) and name.startswith("mida")]
    saved = [(logger.level, logger.propagate) for logger in loggers]
    for logger in loggers:
        logger.setLevel(logging.DEBUG)
        logger.propagate = True
    yield caplog
    for logger, (level, propagate) in zip(loggers, saved):
        logger.setLevel(level)
        logger.propagate = propagate
