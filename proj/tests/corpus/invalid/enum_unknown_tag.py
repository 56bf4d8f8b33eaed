class A(Module):
    def types(self):
        self.s_t = Enum("ON", "OFF")
    def locals(self):
        self.s = self.s_t
        self.n = int
    def init(self):
        self.s = ON
        self.n = self.s
