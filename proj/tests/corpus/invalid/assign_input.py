class A(Module):
    def locals(self):
        self.y = int
    def inputs(self):
        self.i = int
    def next(self):
        self.i = 5
        self.y = self.i
