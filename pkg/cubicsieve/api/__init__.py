"""
Settings, run validation and the HTTP report router.
"""
