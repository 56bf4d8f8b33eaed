class Bounded(Module):
    def locals(self):
        self.c = int
    def inputs(self):
        self.reset = bool
    def init(self):
        self.c = 0
    def next(self):
        if self.reset:
            self.c = 0
        elif self.c < 10:
            self.c = self.c + 1
        else:
            self.c = 10
    def specification(self):
        return self.c >= 0 and self.c <= 10
