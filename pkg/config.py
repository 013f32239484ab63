"""
Configuration for the magnitude toolkit
Resource caps, defaults and environment settings
"""

import os

# Refuse gradings whose generator count exceeds this cap
GENERATOR_CAP = int(os.environ.get('MAGNITUDE_GENERATOR_CAP', '5000000'))

# Default truncation order of magnitude power series
DEFAULT_TERMS = int(os.environ.get('MAGNITUDE_TERMS', '8'))

# Table reproduction depth (--deep switches to the second value)
DEFAULT_MAX_L = int(os.environ.get('MAGNITUDE_MAX_L', '4'))
DEEP_MAX_L = int(os.environ.get('MAGNITUDE_DEEP_MAX_L', '8'))

# Parallel l-slices, passed to joblib as n_jobs
JOBS = int(os.environ.get('MAGNITUDE_JOBS', '1'))

# Seed for every randomized corpus
SEED = int(os.environ.get('MAGNITUDE_SEED', '20180101'))

LOG_LEVEL = os.environ.get('MAGNITUDE_LOG_LEVEL', 'WARNING').upper()
