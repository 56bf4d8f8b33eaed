class A(Module):
    def locals(self):
        self.n = int
        self.b = bool
    def next(self):
        self.b = self.n == True
