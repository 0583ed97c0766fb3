"""
Exceptions raised across the frexlet suite.
"""


class FrexError(Exception):
    pass


class UnknownOp(FrexError):
    def __init__(self, name):
        super().__init__(f'unknown operation symbol {name!r}')
        self.name = name


class ArityMismatch(FrexError):
    def __init__(self, op, expected, got):
        super().__init__(f'{op!r} expects {expected} argument(s), got {got}')
        self.op = op
        self.expected = expected
        self.got = got


class VarOutOfScope(FrexError):
    def __init__(self, index, support=None):
        msg = f'variable index {index} out of scope'
        if support is not None:
            msg += f' (support {support})'
        super().__init__(msg)
        self.index = index
        self.support = support


class UnknownAxiom(FrexError):
    def __init__(self, name):
        super().__init__(f'unknown axiom {name!r}')
        self.name = name


class EndpointMismatch(FrexError):
    def __init__(self, expected, got):
        super().__init__(f'endpoint mismatch: expected {expected}, got {got}')
        self.expected = expected
        self.got = got


class MissingAlgebra(FrexError):
    def __init__(self):
        super().__init__('a constants algebra is required for Sta leaves and evaluation steps')


class SignatureMismatch(FrexError):
    def __init__(self, left, right):
        super().__init__(f'signature mismatch: {left} vs {right}')
        self.left = left
        self.right = right


class StaticInFralGoal(FrexError):
    def __init__(self):
        super().__init__('free-algebra goals may not contain Sta constants')


class NoCoproductRegistered(FrexError):
    def __init__(self, presentation):
        super().__init__(f'no coproduct construction registered for {presentation!r}')
        self.presentation = presentation


class NotProvable(FrexError):
    def __init__(self, goal):
        super().__init__(f'not provable: {goal}')
        self.goal = goal


class ParseError(FrexError):
    def __init__(self, position, expectation):
        super().__init__(f'parse error at position {position}: {expectation}')
        self.position = position
        self.expectation = expectation


class UnknownAlgebra(FrexError):
    def __init__(self, name):
        super().__init__(f'unknown algebra {name!r}')
        self.name = name


class UnknownPresentation(FrexError):
    def __init__(self, name):
        super().__init__(f'unknown presentation {name!r}')
        self.name = name


class AlignmentError(EndpointMismatch):
    def __init__(self, index, expected, got):
        FrexError.__init__(self, f'step {index} does not start at the previous target: expected {expected}, got {got}')
        self.index = index
        self.expected = expected
        self.got = got


class CheckFailed(FrexError):
    def __init__(self, step, reason):
        where = 'goal' if step is None else f'step {step}'
        super().__init__(f'certificate rejected at {where}: {reason}')
        self.step = step
        self.reason = reason


class BoundExceeded(FrexError):
    def __init__(self, states, depth):
        super().__init__(f'search bound exceeded after {states} states at depth {depth}')
        self.states = states
        self.depth = depth
