class Halver(Module):
    def locals(self):
        self.n = int
        self.r = int
    def init(self):
        self.n = 100
        self.r = 0
    def next(self):
        self.r = self.n % 2
        self.n = self.n // 2
