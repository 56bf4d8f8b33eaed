class Walker(Module):
    def locals(self):
        self.pos = int
        self.dir = int
    def init(self):
        self.pos = 0
        self.dir = 1
    def next(self):
        if self.pos >= 3 or self.pos <= -3:
            self.dir = -self.dir
        self.pos = self.pos + self.dir
    def specification(self):
        return self.pos <= 4 and self.pos >= -4
