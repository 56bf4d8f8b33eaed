class A(Module):
    def locals(self):
        self.n = int
    def next(self):
        havoc(self.n)
        assume(self.n)
