class Syn(Module):
    def types(self):
        self.word_t = BitVector(8)
    def locals(self):
        self.w = self.word_t
        self.v = self.word_t
    def init(self):
        self.w = BitVectorVal(3, 8)
        self.v = BitVectorVal(0, 8)
    def next(self):
        self.v = self.w
        self.w = self.w + self.v
