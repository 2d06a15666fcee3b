class EmbeddingError(Exception):
    pass


class NotInSpoError(EmbeddingError):
    pass


class NotNormalizedError(EmbeddingError):
    pass
