class A(Module):
    def locals(self):
        self.n = int
    def next(self):
        self.n = self.missing + 1
