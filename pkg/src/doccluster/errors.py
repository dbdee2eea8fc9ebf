"""Exception hierarchy.

Every error carries a short ``category`` (the class name) and the process
exit status the command line front end reports for it:
0 success, 1 I/O, 2 config/precondition, 3 internal invariant violation.
"""


class DocClusterError(Exception):
    exit_code = 2

    @property
    def category(self):
        return type(self).__name__


class EmptyCorpus(DocClusterError):
    pass


class UnreadableFile(DocClusterError):
    exit_code = 1


class ZeroLengthDocument(DocClusterError):
    pass


class InvalidDF(DocClusterError):
    pass


class VocabularyMismatch(DocClusterError):
    pass


class DimensionMismatch(DocClusterError):
    pass


class BadK(DocClusterError):
    pass


class MissingLabels(DocClusterError):
    pass


class NotAMedoid(DocClusterError):
    pass


class AlreadyMedoid(DocClusterError):
    pass


class UnlabeledDocument(DocClusterError):
    pass


class ConfigError(DocClusterError):
    pass


class InvariantViolation(DocClusterError):
    exit_code = 3
