class QecError(ValueError):
    pass


class DivisionByZero(QecError, ZeroDivisionError):
    pass


class FieldMismatch(QecError):
    pass


class ShapeError(QecError):
    pass


class ParseError(QecError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append("line %d" % line)
        if column is not None:
            where.append("column %d" % column)
        if where:
            message = "%s (%s)" % (message, ", ".join(where))
        super().__init__(message)


class NotAbelian(QecError):
    def __init__(self, i, j):
        self.i = i
        self.j = j
        super().__init__("generators %d and %d do not commute" % (i, j))


class InconsistentPhases(QecError):
    pass


class GaugePairRelationViolated(QecError):
    def __init__(self, i, j, message=None):
        self.i = i
        self.j = j
        super().__init__(message or "gauge pairs %d and %d violate the pairing relations" % (i, j))


class GaugeNotInCentralizer(QecError):
    def __init__(self, i):
        self.i = i
        super().__init__("gauge pair %d does not commute with the stabilizer" % i)


class FixedSetNotCommuting(QecError):
    def __init__(self, i, j):
        self.i = i
        self.j = j
        super().__init__("fixed gauge operators %d and %d do not commute" % (i, j))


class DifferentLength(QecError):
    pass


class NoCodewords(QecError):
    pass


class DimensionTooLarge(QecError):
    def __init__(self, dim, cap):
        self.dim = dim
        self.cap = cap
        super().__init__("dense dimension %d exceeds the oracle cap %d" % (dim, cap))


class RankMismatch(QecError):
    def __init__(self, expected, found):
        self.expected = expected
        self.found = found
        super().__init__("projector rank %d, expected %d" % (found, expected))
