class Door(Module):
    def types(self):
        self.door_t = Enum("OPEN", "CLOSED", "LOCKED")
    def locals(self):
        self.door = self.door_t
    def inputs(self):
        self.push = bool
        self.key = bool
    def init(self):
        self.door = CLOSED
    def next(self):
        if self.door == CLOSED:
            if self.push:
                self.door = OPEN
            elif self.key:
                self.door = LOCKED
        elif self.door == OPEN:
            self.door = CLOSED
        else:
            if self.key:
                self.door = CLOSED
