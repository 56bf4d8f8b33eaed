class Env(Module):
    def locals(self):
        self.x = int
        self.y = int
    def init(self):
        self.x = 0
        self.y = 0
    def next(self):
        havoc(self.x)
        assume(self.x > 0)
        self.y = self.y + self.x
    def specification(self):
        return self.y >= 0
