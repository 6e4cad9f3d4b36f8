"""
Shared test bases, helpers and factories for monopsono tests.
"""
