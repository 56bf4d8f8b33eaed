class Changed(Module):
    def locals(self):
        self.prev = int
        self.changed = bool
    def inputs(self):
        self.sample = int
    def init(self):
        self.prev = 0
        self.changed = False
    def next(self):
        self.changed = self.sample != self.prev
        self.prev = self.sample
