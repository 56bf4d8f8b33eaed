class A(Module):
    def locals(self):
        self.b = bool
    def init(self):
        self.b = 0
