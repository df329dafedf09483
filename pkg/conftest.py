import os
import sys

# packages live side by side at the project root
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

# reference material, not part of the test suite
collect_ignore = ["examples"]


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: enumerations at full acceptance size (deselect with -m 'not slow')")
