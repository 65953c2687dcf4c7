"""Exception hierarchy. Data-level problems raise FrameProbeError subclasses;
plain misuse of an API (bad span, empty sequence) raises ValueError."""


class FrameProbeError(Exception):
    """Base class for all toolkit errors."""


class LexiconParseError(FrameProbeError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class LexiconValidationError(FrameProbeError):
    def __init__(self, violations):
        self.violations = list(violations)
        lines = ", ".join(f"{v.rule}[{v.subject}]" for v in self.violations)
        super().__init__(f"lexicon has {len(self.violations)} violation(s): {lines}")


class AnnotationError(FrameProbeError):
    """An annotation record is malformed or inconsistent with the lexicon."""


class GraphBuildError(FrameProbeError):
    """Graph construction hit an annotation it cannot place."""


class HeadConfigError(FrameProbeError):
    """A head was asked about an id outside its row set."""


class TrainingError(FrameProbeError):
    def __init__(self, message, epoch=None):
        self.epoch = epoch
        if epoch is not None:
            message = f"{message} (epoch {epoch})"
        super().__init__(message)


class TemplateError(FrameProbeError):
    """A template uses a slot its probing type does not provide."""


class RenderError(FrameProbeError):
    """A template slot was left unbound at render time."""


class SamplingError(FrameProbeError):
    """Distractor pool too small for the requested sample."""


class ExportError(FrameProbeError):
    """Augmentation export hit a probe without the needed provenance."""


class DatasetLoadError(FrameProbeError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)


class ComparisonError(FrameProbeError):
    """Reports being compared do not belong together."""


class AdapterTransportError(FrameProbeError):
    """Transient transport failure; the harness may retry these."""


class PipelineError(FrameProbeError):
    def __init__(self, message, stage=None):
        self.stage = stage
        if stage is not None:
            message = f"[stage {stage}] {message}"
        super().__init__(message)
