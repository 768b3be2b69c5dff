"""Error types shared across the package."""


class NotInvertibleModF(ArithmeticError):
    """Requested inverse modulo f does not exist (inputs share a factor)."""


class PoleOnModulus(ArithmeticError):
    """A rational function has a pole on a root of the reduction modulus."""


class NotATree(ValueError):
    """Edge list does not describe a connected graph on r vertices with r-1 edges."""


class SplittingFieldTooLarge(ArithmeticError):
    """Torsion search exceeded the extension-degree cap."""


class BadCharacteristic(ValueError):
    """Modulus shares a factor with the characteristic prime of the A-field."""


class NotTorsion(ValueError):
    """A pairing argument is not killed by phi_f."""


class TruncationTooShallow(ValueError):
    """No q-power monomial is exact on both sides of a truncated comparison."""
