class CompileError(Exception):
    """Base class for every error reported against MTL source.

    ``span`` locates the primary offending construct; ``notes`` holds extra
    ``(message, span)`` pairs, e.g. the earlier declaration of a duplicate.
    """

    label = 'error'

    def __init__(self, message, span=None, notes=()):
        super().__init__(message)
        self.message = message
        self.span = span
        self.notes = tuple(notes)

    @property
    def spans(self):
        return [span for span in [self.span] + [span for _, span in self.notes] if span is not None]

    def diagnostics(self, filename='<source>'):
        lines = [_format_line(filename, self.span, self.label, self.message)]
        for message, span in self.notes:
            lines.append(_format_line(filename, span, 'note', message))
        return lines

    def __str__(self):
        if self.span is None:
            return self.message
        return '{}:{}: {}'.format(self.span.line, self.span.column, self.message)


def _format_line(filename, span, label, message):
    if span is None:
        return '{}: {}: {}'.format(filename, label, message)
    return '{}:{}:{}: {}: {}'.format(filename, span.line, span.column, label, message)


class LexError(CompileError):
    pass


class MtlSyntaxError(CompileError):

    def __init__(self, message, span=None, expected=()):
        super().__init__(message, span)
        self.expected = frozenset(expected)


class ArityError(MtlSyntaxError):
    pass


class DuplicateSymbolError(CompileError):
    pass


class UndeclaredTypeError(CompileError):

    def __init__(self, name, span=None):
        super().__init__("undeclared type '{}'".format(name), span)
        self.name = name


class ResolutionError(CompileError):
    """A sem target path that does not resolve.

    ``segment_index`` is 1-based so it reads the same way as the message.
    """

    def __init__(self, path, segment_index, candidates=(), span=None):
        segment = path[segment_index - 1]
        message = "cannot resolve '{}' (segment {} '{}')".format('.'.join(path), segment_index, segment)
        if candidates:
            message += '; candidates: {}'.format(', '.join(candidates))
        super().__init__(message, span)
        self.path = tuple(path)
        self.segment_index = segment_index
        self.segment = segment
        self.candidates = tuple(candidates)


class DuplicateSemError(CompileError):

    def __init__(self, target, span, previous_span):
        super().__init__(
            "duplicate sem for '{}'".format(target),
            span,
            notes=[("first sem for '{}' declared here".format(target), previous_span)],
        )
        self.target = target


class CallsiteError(CompileError):
    pass
