"""
Moduli Utilities Package
Logging, configuration, errors and output rendering shared by every module.
"""
