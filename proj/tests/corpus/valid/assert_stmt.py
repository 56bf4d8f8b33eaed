class Checked(Module):
    def locals(self):
        self.k = int
    def init(self):
        self.k = 1
    def next(self):
        assert self.k > 0
        self.k = self.k * 2
