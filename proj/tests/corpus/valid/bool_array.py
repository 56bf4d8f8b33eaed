class Flags(Module):
    def locals(self):
        self.flags = Array(int, bool)
        self.i = int
    def inputs(self):
        self.set = bool
    def init(self):
        self.i = 0
    def next(self):
        if self.set:
            self.flags[self.i] = True
        self.i = self.i + 1
