package dlib;

public class LList extends BaseObject
{
    private LList next;
    private Object value;

    public LList (Object value)
    {
        this.value = value;
        next = null;
    }

    public LList append (Object item)
    {
        LList tail = this;
        while (tail.next != null)
        {
            tail = tail.next;
        }
        tail.next = new LList(item);
        return( this );
    }

    public int length ()
    {
        int n = 0;
        LList walk = this;
        while (walk != null)
        {
            n = n + 1;
            walk = walk.next;
        }
        return( n );
    }

    public Object head ()
    {
        return( value );
    }

    public LList rest ()
    {
        return( next );
    }

    public boolean contains (Object item)
    {
        LList walk = this;
        while (walk != null)
        {
            if (walk.value == item)
            {
                return( true );
            }
            walk = walk.next;
        }
        return( false );
    }
}
