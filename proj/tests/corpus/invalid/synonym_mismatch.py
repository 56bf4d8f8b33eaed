class A(Module):
    def types(self):
        self.w_t = BitVector(8)
    def locals(self):
        self.w = self.w_t
    def init(self):
        self.w = True
