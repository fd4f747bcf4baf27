_LookupError = LookupError
_ValueError = ValueError


class NicheError(Exception):
    pass


class HypergraphError(NicheError, _ValueError):
    pass


class BadVertexId(HypergraphError):
    def __init__(self, vertex, *args):
        self.vertex = vertex
        super().__init__(*args or (f'invalid vertex id: {vertex!r}', ))


class LoopEdge(HypergraphError):
    def __init__(self, edge, *args):
        self.edge = edge
        super().__init__(*args or (
            f'hyperedge {sorted(edge)} has fewer than two vertices', ))


class NonSimple(HypergraphError):
    def __init__(self, edge, superedge, *args):
        self.edge = edge
        self.superedge = superedge
        super().__init__(*args or (
            f'hyperedge {sorted(edge)} is contained in '
            f'{sorted(superedge)}', ))


class UnknownVertex(HypergraphError, _LookupError):
    def __init__(self, edge, vertex, *args):
        self.edge = edge
        self.vertex = vertex
        super().__init__(*args or (
            f'vertex {vertex!r} of {sorted(edge)} is not in the vertex set',
        ))


class UnknownEdge(NicheError, _LookupError):
    def __init__(self, edge, *args):
        self.edge = edge
        super().__init__(*args or (
            f'hyperedge {sorted(edge)} is not in the hypergraph', ))


class NotInT(NicheError):
    def __init__(self, membership, *args):
        self.membership = membership
        super().__init__(*args or (f'not in class T: {membership.reason}', ))


class NoTrunk(NicheError):
    def __init__(self, edges, *args):
        self.edges = edges
        super().__init__(*args or (
            'hypertree has no trunk (two twigs); use the two-edge '
            'construction', ))


class BadSpec(NicheError, _ValueError):
    pass


class DigraphError(NicheError, _ValueError):
    pass


class SelfArc(DigraphError):
    def __init__(self, vertex, *args):
        self.vertex = vertex
        super().__init__(*args or (f'self-arc at {vertex!r}', ))


class TwoCycle(DigraphError):
    def __init__(self, u, v, *args):
        self.u = u
        self.v = v
        super().__init__(*args or (
            f'arcs ({u!r}, {v!r}) and ({v!r}, {u!r}) form a 2-cycle', ))


class SameVertex(DigraphError):
    def __init__(self, vertex, *args):
        self.vertex = vertex
        super().__init__(*args or (
            f'cannot swap the neighbourhoods of {vertex!r} with itself', ))


class SharedVertexMismatch(DigraphError):
    def __init__(self, expected, found, *args):
        self.expected = expected
        self.found = found
        super().__init__(*args or (
            f'digraphs share {sorted(found)}, expected {sorted(expected)}', ))


class ConstructionError(NicheError):
    def __init__(self, *args, trace=None):
        self.trace = trace
        super().__init__(*args)


class DegenerateBranch(ConstructionError):
    pass


class TooSmall(ConstructionError):
    pass


class NoSwapPartner(ConstructionError):
    def __init__(self, vertex, edge, *args, trace=None):
        self.vertex = vertex
        self.edge = edge
        super().__init__(*args or (
            f'bud {vertex!r} of {sorted(edge)} has both neighbourhoods '
            f'non-empty and no other bud of the hyperedge can take its '
            f'place', ), trace=trace)


class VerificationError(ConstructionError):
    def __init__(self, violations, *args, trace=None):
        self.violations = violations
        super().__init__(*args or (
            'construction failed verification: ' +
            '; '.join(str(v) for v in violations), ), trace=trace)


class BudgetExceeded(NicheError):
    def __init__(self, *args, dags_examined=0):
        self.dags_examined = dags_examined
        super().__init__(*args)


class ParseError(NicheError, _ValueError):
    def __init__(self, msg, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            msg = f'{msg} (line {line}, column {column})'
        super().__init__(msg)
