class Max(Module):
    def locals(self):
        self.m = int
    def inputs(self):
        self.a = int
        self.b = int
    def init(self):
        self.m = 0
    def next(self):
        self.m = self.a if self.a > self.b else self.b
    def specification(self):
        return self.m >= self.a or self.m >= self.b
