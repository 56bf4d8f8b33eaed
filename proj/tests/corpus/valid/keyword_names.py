class Names(Module):
    def locals(self):
        self.input = int
        self.var = bool
    def init(self):
        self.input = 3
        self.var = True
    def next(self):
        self.input = self.input - 1
        self.var = self.input > 0
