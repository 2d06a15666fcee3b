class ContactError(Exception):
    pass


class ContactStructureError(ContactError):
    pass


class NotContactError(ContactError):
    def __init__(self, frame_index: int, bracket):
        super().__init__(
            f'Field is not contact: alpha([X, T_{frame_index}]) != 0 '
            f'where [X, T_{frame_index}] = {bracket}'
        )
        self.frame_index = frame_index
        self.bracket = bracket
