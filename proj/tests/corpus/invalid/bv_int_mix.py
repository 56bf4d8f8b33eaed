class A(Module):
    def locals(self):
        self.a = BitVector(8)
    def next(self):
        self.a = self.a + 1
