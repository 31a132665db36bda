"""
Patience solver: rules, deals, search and win-rate statistics.
"""
