"""Exception types shared across the package."""


class GroupTheoryError(Exception):
    """Base class for all structured errors raised by coprimelab."""


class InvalidPermutation(GroupTheoryError):
    """An image list is not a bijection of the point set."""


class CapExceeded(GroupTheoryError):
    """Group closure grew past the configured enumeration cap."""


class NotNormal(GroupTheoryError):
    """A quotient was requested by a non-normal subgroup."""


class NotBijective(GroupTheoryError):
    """Generator images induce a non-bijective map."""


class NotHomomorphism(GroupTheoryError):
    """Generator images violate the homomorphism law; carries a witness pair."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotCoprime(GroupTheoryError):
    """The automorphism order shares a factor with the group order."""


class NotNilpotent(GroupTheoryError):
    """Operation requires a nilpotent group."""


class NotSoluble(GroupTheoryError):
    """Operation requires a soluble group."""


class NotAPGroup(GroupTheoryError):
    """Operation requires a group of prime-power order."""


class DecompositionNotFound(GroupTheoryError):
    """No twisted/fixed factorization exists; input violates the hypotheses."""


class NonUniqueDecomposition(GroupTheoryError):
    """More than one twisted/fixed factorization exists; input is corrupt."""


class NotElementaryAbelianLayer(GroupTheoryError):
    """A filtration quotient is not an elementary abelian p-group."""


class NotCoprimeToP(GroupTheoryError):
    """Scalar extension needs the root order coprime to the characteristic."""


class NotInvariant(GroupTheoryError):
    """A subgroup expected to be automorphism-invariant is not."""


class PreconditionViolated(GroupTheoryError):
    """A stated hypothesis of the requested check does not hold."""


class SylowNotFound(GroupTheoryError):
    """No invariant Sylow subgroup was found (possible only without coprimality)."""


class UnknownSpec(GroupTheoryError):
    """Unrecognized corpus instance description."""


class ParseError(GroupTheoryError):
    """Malformed input file; message carries the location."""
