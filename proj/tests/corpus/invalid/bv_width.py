class A(Module):
    def locals(self):
        self.a = BitVector(8)
        self.b = BitVector(4)
    def next(self):
        self.a = self.b
