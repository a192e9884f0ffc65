"""
Error types raised by the moduli engine.
Library code raises these; main.py maps them onto exit codes.
"""


class ModuliError(Exception):
    """Base class for every error the engine raises on purpose"""


class IndexOutOfRange(ModuliError):
    """A b index outside 1..2g, a gamma index outside 1..g, or a bad handle"""


class MonomialSyntaxError(ModuliError, ValueError):
    """Monomial text that does not follow the grammar"""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class GenusOutOfRange(ModuliError):
    pass


class DegreeOutOfRange(ModuliError):
    pass


class NoDualFound(ModuliError):
    """Every complementary monomial pairs to zero with the generator"""


class StepTooLarge(ModuliError):
    pass


class DegenerateInput(ModuliError):
    pass


class ConfigError(ModuliError):
    pass
