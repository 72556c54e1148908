"""Exception hierarchy.

Every error carries a module-qualified code so the CLI can print
``emoframe.<module>: <CODE> message`` on the diagnostic stream.
"""


class EmoframeError(Exception):
    module = "emoframe"
    code = "E-DOMAIN"

    def qualified(self):
        return f"emoframe.{self.module}: {self.code} {self}"


class TurtleSyntaxError(EmoframeError):
    module = "rdf"
    code = "E-SYNTAX"

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{where}")


class UndefinedPrefixError(TurtleSyntaxError):
    code = "E-PREFIX"


class QuerySyntaxError(EmoframeError):
    module = "query"
    code = "E-SYNTAX"


class UnsupportedFeatureError(QuerySyntaxError):
    code = "E-UNSUPPORTED"

    def __init__(self, feature):
        self.feature = feature
        super().__init__(f"unsupported SPARQL feature: {feature}")


class OntologyError(EmoframeError):
    module = "ontology"


class AssetError(OntologyError):
    code = "E-ASSET"


class ClosureCycleError(OntologyError):
    code = "E-CYCLE"

    def __init__(self, relation, cycle):
        self.relation = relation
        self.cycle = list(cycle)
        names = " -> ".join(str(t) for t in self.cycle)
        super().__init__(f"cycle in {relation}: {names}")


class FrameError(OntologyError):
    code = "E-FRAME"


class TriggerError(EmoframeError):
    module = "triggers"


class RemoteFetchError(TriggerError):
    code = "E-NETWORK"

    def __init__(self, message, cached=(), missing=()):
        self.cached = list(cached)
        self.missing = list(missing)
        super().__init__(
            f"{message} (cached queries: {len(self.cached)}, missing: {len(self.missing)})"
        )


class ProtocolError(TriggerError):
    code = "E-PROTOCOL"


class DetectionError(EmoframeError):
    module = "detector"


class EmptyTextError(DetectionError):
    code = "E-EMPTY"


class NoContentError(DetectionError):
    code = "E-NOGRAPH"


class EvaluationError(EmoframeError):
    module = "evaluation"


class UndefinedCorrelationError(EvaluationError):
    code = "E-UNDEFINED-R"


class MultimodalError(EmoframeError):
    module = "multimodal"
